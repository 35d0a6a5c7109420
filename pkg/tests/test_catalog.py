"""Identity registry, lemma routines and value evaluation."""

import json
import math

import pytest
from scipy import integrate, special

from logkernel.catalog import (
    build_registry,
    get_identity,
    lhs_value,
    moment_integral,
    registry_document,
    rhs_value,
    summation_formula,
    zeta3_chain,
)
from logkernel.catalog.lemmas import kummer_trig_quadrature
from logkernel.exceptions import DomainError, IdentityNotFoundError, ParameterDomainError, VariantIndexError
from logkernel.specfun import kummer_trig_integral


def test_registry_ids_are_unique_and_cited(registry, registry_ids):
    assert len(registry_ids) == len(set(registry_ids))
    for n in range(1, 20):
        assert f"main-{n:02d}" in registry_ids
    for entry in range(1, 18):
        assert f"appendix-{entry:02d}" in registry_ids
    assert "remark-n" in registry_ids
    assert all(identity.citation for identity in registry)


def test_table_entries_cite_their_row(registry):
    for identity in registry:
        if identity.id.startswith("appendix-"):
            entry = int(identity.id.split("-")[1])
            assert identity.citation.endswith(f"entry {entry}")


def test_unknown_identity():
    with pytest.raises(IdentityNotFoundError):
        get_identity("main-99")


def test_parameter_domain_is_enforced():
    with pytest.raises(ParameterDomainError):
        lhs_value("main-03", {"a": math.pi})
    with pytest.raises(ParameterDomainError):
        rhs_value("main-05", 0, {"a": -1.0})
    with pytest.raises(ParameterDomainError):
        lhs_value("main-05", {})


def test_variant_index_out_of_range():
    with pytest.raises(VariantIndexError):
        rhs_value("main-05", 3, {"a": 1.0})


def test_lhs_labels():
    identity = get_identity("main-13")
    assert identity.lhs_label(0) == "lhs(0,1)"
    assert identity.lhs_label(1) == "lhs(1,inf)"
    assert identity.variant_labels()[0] == "1/24"


def test_closed_form_rhs(qcfg):
    lhs = lhs_value("main-05", {"a": 2.0}, qcfg)
    rhs = rhs_value("main-05", 0, {"a": 2.0})
    assert rhs.mode_used == "closed_form"
    assert abs(rhs.value - math.pi / 4) <= 1e-15
    assert abs(lhs.value - rhs.value) <= 1e-10


def test_two_forms_of_main_17_agree():
    exact = rhs_value("main-17", 0).value
    trigamma = rhs_value("main-17", 1).value
    assert abs(exact - (1 / 48 - 1 / (4 * math.pi**2))) <= 1e-15
    assert abs(exact - trigamma) <= 1e-13


def test_main_06_three_series_agree(qcfg):
    lhs = lhs_value("main-06", {}, qcfg).value
    for variant in range(3):
        assert abs(rhs_value("main-06", variant).value - lhs) <= 1e-8


@pytest.mark.parametrize("k", [0, 5, 10, 15, 20])
@pytest.mark.parametrize("a", [1.0, math.pi, 2 * math.pi])
@pytest.mark.parametrize("p", [0, 1])
def test_moment_integral_matches_scipy(k, a, p):
    def f(x):
        lx = math.log(x)
        return (-x) ** k * lx**p / (a * a + lx * lx)

    expected, _ = integrate.quad(f, 0.0, 1.0, epsabs=1e-14, epsrel=1e-13, limit=500)
    assert abs(moment_integral(k, a, p) - expected) <= 1e-10


@pytest.mark.parametrize("k", range(0, 8))
def test_moment_at_pi_is_cosine_integral(k):
    assert abs(moment_integral(k, math.pi, 1) + special.sici((k + 1) * math.pi)[1]) <= 1e-12


def test_moment_integral_domain():
    with pytest.raises(DomainError):
        moment_integral(-1, 1.0, 0)
    with pytest.raises(DomainError):
        moment_integral(0, 0.0, 0)
    with pytest.raises(DomainError):
        moment_integral(0, 1.0, 2)


@pytest.mark.parametrize("s", [2.0, 3.0, 4.0])
def test_summation_formula_gives_zeta(s):
    assert abs(summation_formula(s) - special.zeta(s, 1)) <= 1e-10


def test_summation_formula_domain():
    with pytest.raises(DomainError):
        summation_formula(1.0)


def test_zeta3_chain(qcfg):
    assert abs(zeta3_chain(qcfg).value - special.zeta(3.0, 1)) <= 1e-9


@pytest.mark.parametrize("k", range(1, 7))
def test_kummer_trig_quadrature(k):
    assert abs(kummer_trig_quadrature(k).value - kummer_trig_integral(k)) <= 1e-11


def test_registry_document_is_json_ready(registry):
    document = registry_document()
    assert len(document) == len(registry)
    assert [d["id"] for d in document] == [i.id for i in registry]
    text = json.dumps(document)
    assert "appendix-03" in text
    archaic = [d for d in document if d["status_hint"] == "archaic_convention"]
    assert archaic and all(any("convention" in r for r in d["rhs"]) for d in archaic)


def test_registry_is_cached():
    assert build_registry() is build_registry()


def test_main_12_constant_at_pi():
    assert abs(rhs_value("main-12", 0, {"a": math.pi}).value - 1 / 24) <= 1e-13


@pytest.mark.parametrize("identity_id", ["main-12", "main-14", "main-16"])
@pytest.mark.parametrize("a", [0.5, 1.0, math.pi, 2 * math.pi])
def test_polygamma_closed_forms_match_quadrature(identity_id, a, qcfg):
    lhs = lhs_value(identity_id, {"a": a}, qcfg).value
    rhs = rhs_value(identity_id, 0, {"a": a}).value
    assert abs(lhs - rhs) <= 1e-9
