"""The identity catalog: pass paths, fail paths, report structure."""

import pytest

from qeuler import (
    DuplicateNode,
    QRational,
    UnknownIdentity,
    verify_all,
    verify_catalog,
    verify_lagrange,
    verify_lemma_akj,
    verify_thm_fn,
    verify_thm_gen,
)
from qeuler.qfield import QQ, QR_ONE, QR_ZERO
from qeuler.verify import (
    CATALOG,
    DEFAULT_GRID,
    resolve_alpha_beta,
    resolve_base_series,
)

from conftest import rand_qrational, seeded

PREC = 16


class TestCatalogPasses:
    @pytest.mark.parametrize("identity_id", sorted(CATALOG))
    def test_default_params_pass(self, identity_id):
        report = verify_catalog(identity_id, {}, PREC)
        assert report.passed, report.detail or report.residual_witness

    def test_default_grid_passes(self):
        reports = verify_all(PREC)
        assert len(reports) == len(DEFAULT_GRID)
        assert all(r.passed for r in reports)

    def test_unknown_identity(self):
        with pytest.raises(UnknownIdentity):
            verify_catalog("no-such-identity", {}, PREC)
        with pytest.raises(UnknownIdentity):
            resolve_base_series("no-such-series")
        with pytest.raises(UnknownIdentity):
            resolve_alpha_beta("no-such-pair", PREC)


class TestFailurePaths:
    def test_perturbed_solution_fails_with_witness(self):
        P = resolve_base_series("one")
        delta = QRational.from_rational(QQ(1, 7))
        report = verify_thm_fn(P, 2, PREC, perturb=(3, delta))
        assert report.status == "fail"
        exp, value = report.residual_witness
        assert not value.is_zero()
        assert report.guaranteed_window[0] <= exp < report.guaranteed_window[1]

    def test_perturbation_outside_window_is_invisible(self):
        P = resolve_base_series("one")
        delta = QRational.from_rational(1)
        report = verify_thm_fn(P, 2, PREC, perturb=(PREC + 5, delta))
        assert report.passed

    def test_lagrange_duplicate_nodes(self):
        nodes = [QR_ZERO, QR_ONE, QR_ONE]
        with pytest.raises(DuplicateNode):
            verify_lagrange(nodes)


class TestLagrange:
    def test_random_tuples(self):
        rng = seeded(701)
        for _ in range(25):
            n = rng.randint(1, 5)
            nodes = []
            while len(nodes) < n + 1:
                c = rand_qrational(rng, max_deg=2, span=4)
                if all(c != d for d in nodes):
                    nodes.append(c)
            report = verify_lagrange(nodes)
            assert report.passed, (n, report.residual_witness)

    def test_integer_nodes(self):
        nodes = [QRational.from_rational(i) for i in range(5)]
        assert verify_lagrange(nodes).passed


class TestTheoremChecks:
    @pytest.mark.parametrize("name", ["one", "one-plus-x", "one-minus-x"])
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_power_family(self, name, n):
        assert verify_thm_fn(resolve_base_series(name), n, PREC).passed

    @pytest.mark.parametrize("n,k", [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3)])
    def test_intermediate_stages(self, n, k):
        assert verify_lemma_akj(resolve_base_series("one"), n, k, PREC).passed

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_general_family(self, n):
        alpha, beta = resolve_alpha_beta("eq-ab1", PREC)
        assert verify_thm_gen(alpha, beta, n, PREC).passed


class TestReports:
    def test_json_shape(self):
        report = verify_catalog("Euler", {}, PREC)
        obj = report.to_json()
        assert obj["id"] == "Euler"
        assert obj["status"] == "pass"
        assert obj["witness"] is None
        assert isinstance(obj["window"], list) and len(obj["window"]) == 2

    def test_fail_report_witness_json(self):
        P = resolve_base_series("one")
        report = verify_thm_fn(P, 2, PREC, perturb=(2, QR_ONE))
        obj = report.to_json()
        assert obj["status"] == "fail"
        assert "exp" in obj["witness"] and "value" in obj["witness"]

    def test_exact_checks_report_unbounded_window(self):
        obj = verify_catalog("q1-product", {"n": 4}, PREC).to_json()
        assert obj["window"][1] == "inf"


class TestParamHandling:
    def test_fn_params_recorded(self):
        report = verify_catalog("fn", {"P": "one-plus-x", "n": 3}, PREC)
        assert report.passed
        assert report.params["P"] == "one-plus-x"
        assert report.params["n"] == 3

    def test_q1_product_range(self):
        for n in range(1, 7):
            assert verify_catalog("q1-product", {"n": n}, PREC).passed

    def test_precision_stability_small(self):
        # the same checks at a higher precision still pass
        for identity_id, params in [("Euler", {}), ("Eulerq", {}), ("fn", {"n": 2})]:
            assert verify_catalog(identity_id, params, PREC + 16).passed
