"""Numeric certification of the derived-graph energy and spectrum laws.

Every check compares two independent code paths: a full eigendecomposition
of the constructed derived graph on one side, and a closed-form scaling of
the base graph's numeric quantities on the other, so a shared bug cannot
confirm itself.

Deviation conventions: entrywise vertex-energy and spectrum claims record
the max absolute deviation; the total-energy and partition claims record
the deviation scaled by max(1, |reference|), i.e. relative for large
values.  A report passes exactly when its deviation is within tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .derived import (
    m_shadow,
    m_splitting,
    predicted_shadow_spectrum,
    predicted_shadow_vertex_energies,
    predicted_splitting_spectrum,
    predicted_splitting_vertex_energies,
)
from .graphs import (
    Graph,
    adjacency_matrix,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    gnp_random_graph,
    graph_from_edge_list,
    path_graph,
    star_graph,
)
from .spectral import (
    DEFAULT_EIG_TOL,
    Spectrum,
    eigendecompose_symmetric,
    graph_energy,
    vertex_energies,
)

CLAIM_IDS = (
    "splitting_vertex_energy",
    "splitting_total_energy",
    "splitting_spectrum",
    "shadow_vertex_energy",
    "shadow_total_energy",
    "shadow_spectrum",
    "energy_partition",
)

DEFAULT_TOL = 1e-8
# two compounded eigensolves justify the looser theorem tolerance above;
# the partition identity involves a single solve
PARTITION_TOL = 1e-10


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one closed-form-vs-numeric comparison.

    m is 0 for the per-graph energy_partition claim, which has no copy
    parameter.  per_vertex_deviations is populated for the entrywise
    vertex-energy claims only.
    """

    claim_id: str
    graph_descriptor: str
    m: int
    max_abs_deviation: float
    tolerance: float
    passed: bool
    per_vertex_deviations: tuple[float, ...] | None = None


def _report(claim_id: str, descriptor: str, m: int, deviation: float, tol: float,
            per_vertex: tuple[float, ...] | None = None) -> VerificationReport:
    return VerificationReport(
        claim_id=claim_id,
        graph_descriptor=descriptor,
        m=m,
        max_abs_deviation=deviation,
        tolerance=tol,
        passed=deviation <= tol,
        per_vertex_deviations=per_vertex,
    )


def _graph_spectrum(g: Graph, eig_tol: float) -> Spectrum:
    return eigendecompose_symmetric(adjacency_matrix(g), eig_tol)


def _scaled_deviation(value: float, reference: float) -> float:
    return abs(value - reference) / max(1.0, abs(reference))


def verify_splitting_theorem(g: Graph, m: int, tol: float = DEFAULT_TOL, *,
                             eig_tol: float = DEFAULT_EIG_TOL,
                             descriptor: str = "graph",
                             base_spectrum: Spectrum | None = None,
                             derived_spectrum: Spectrum | None = None,
                             ) -> VerificationReport:
    """Check the splitting vertex-energy scaling law on g entrywise."""
    if base_spectrum is None:
        base_spectrum = _graph_spectrum(g, eig_tol)
    if derived_spectrum is None:
        derived_spectrum = _graph_spectrum(m_splitting(g, m), eig_tol)
    predicted = predicted_splitting_vertex_energies(vertex_energies(base_spectrum), m)
    numeric = vertex_energies(derived_spectrum)
    deviations = np.abs(numeric - predicted)
    return _report("splitting_vertex_energy", descriptor, m,
                   float(deviations.max(initial=0.0)), tol,
                   per_vertex=tuple(float(d) for d in deviations))


def verify_shadow_theorem(g: Graph, m: int, tol: float = DEFAULT_TOL, *,
                          eig_tol: float = DEFAULT_EIG_TOL,
                          descriptor: str = "graph",
                          base_spectrum: Spectrum | None = None,
                          derived_spectrum: Spectrum | None = None,
                          ) -> VerificationReport:
    """Check that every shadow vertex inherits its base vertex's energy."""
    if base_spectrum is None:
        base_spectrum = _graph_spectrum(g, eig_tol)
    if derived_spectrum is None:
        derived_spectrum = _graph_spectrum(m_shadow(g, m), eig_tol)
    predicted = predicted_shadow_vertex_energies(vertex_energies(base_spectrum), m)
    numeric = vertex_energies(derived_spectrum)
    deviations = np.abs(numeric - predicted)
    return _report("shadow_vertex_energy", descriptor, m,
                   float(deviations.max(initial=0.0)), tol,
                   per_vertex=tuple(float(d) for d in deviations))


def verify_total_energy_factors(g: Graph, m: int, tol: float = DEFAULT_TOL, *,
                                eig_tol: float = DEFAULT_EIG_TOL,
                                descriptor: str = "graph",
                                base_spectrum: Spectrum | None = None,
                                splitting_spectrum: Spectrum | None = None,
                                shadow_spectrum: Spectrum | None = None,
                                ) -> tuple[VerificationReport, VerificationReport]:
    """Check E(Spl_m(g)) = sqrt(4m+1)*E(g) and E(D_m(g)) = m*E(g).

    Both sides of each identity come from full numeric eigensolves; only the
    factor is closed-form.
    """
    if base_spectrum is None:
        base_spectrum = _graph_spectrum(g, eig_tol)
    if splitting_spectrum is None:
        splitting_spectrum = _graph_spectrum(m_splitting(g, m), eig_tol)
    if shadow_spectrum is None:
        shadow_spectrum = _graph_spectrum(m_shadow(g, m), eig_tol)
    base_energy = graph_energy(base_spectrum)
    root = math.sqrt(4.0 * m + 1.0)
    splitting_report = _report(
        "splitting_total_energy", descriptor, m,
        _scaled_deviation(graph_energy(splitting_spectrum), root * base_energy), tol)
    shadow_report = _report(
        "shadow_total_energy", descriptor, m,
        _scaled_deviation(graph_energy(shadow_spectrum), m * base_energy), tol)
    return splitting_report, shadow_report


def verify_spectrum_maps(g: Graph, m: int, tol: float = DEFAULT_TOL, *,
                         eig_tol: float = DEFAULT_EIG_TOL,
                         descriptor: str = "graph",
                         base_spectrum: Spectrum | None = None,
                         splitting_spectrum: Spectrum | None = None,
                         shadow_spectrum: Spectrum | None = None,
                         ) -> tuple[VerificationReport, VerificationReport]:
    """Compare sorted numeric derived spectra against the predicted multisets."""
    if base_spectrum is None:
        base_spectrum = _graph_spectrum(g, eig_tol)
    if splitting_spectrum is None:
        splitting_spectrum = _graph_spectrum(m_splitting(g, m), eig_tol)
    if shadow_spectrum is None:
        shadow_spectrum = _graph_spectrum(m_shadow(g, m), eig_tol)
    base = base_spectrum.eigenvalues
    splitting_dev = np.abs(
        splitting_spectrum.eigenvalues - predicted_splitting_spectrum(base, m))
    shadow_dev = np.abs(
        shadow_spectrum.eigenvalues - predicted_shadow_spectrum(base, m))
    return (
        _report("splitting_spectrum", descriptor, m,
                float(splitting_dev.max(initial=0.0)), tol),
        _report("shadow_spectrum", descriptor, m,
                float(shadow_dev.max(initial=0.0)), tol),
    )


def verify_energy_partition(g: Graph, tol: float = PARTITION_TOL, *,
                            eig_tol: float = DEFAULT_EIG_TOL,
                            descriptor: str = "graph",
                            spectrum: Spectrum | None = None,
                            ) -> VerificationReport:
    """Check that the vertex energies of g sum to its total energy."""
    if spectrum is None:
        spectrum = _graph_spectrum(g, eig_tol)
    total = graph_energy(spectrum)
    partition_sum = float(np.sum(vertex_energies(spectrum)))
    return _report("energy_partition", descriptor, 0,
                   _scaled_deviation(partition_sum, total), tol)


def default_corpus(seed: int = 42) -> list[tuple[Graph, str]]:
    """Deterministic verification corpus.

    Paths, cycles, complete graphs, stars, complete bipartite graphs, nine
    seeded G(n, 1/2) samples for n in {5, 8, 12}, one disconnected graph,
    and one graph with an isolated vertex.
    """
    corpus: list[tuple[Graph, str]] = []
    for n in range(2, 9):
        corpus.append((path_graph(n), f"P{n}"))
    for n in range(3, 9):
        corpus.append((cycle_graph(n), f"C{n}"))
    for n in range(2, 7):
        corpus.append((complete_graph(n), f"K{n}"))
    for k in range(1, 6):
        corpus.append((star_graph(k + 1), f"K1,{k}"))
    for a in range(2, 5):
        for b in range(a, 9 - a):
            corpus.append((complete_bipartite_graph(a, b), f"K{a},{b}"))
    rng = np.random.default_rng(seed)
    for n in (5, 8, 12):
        for sample in range(3):
            corpus.append((gnp_random_graph(n, 0.5, rng), f"G({n},0.5)#{sample}"))
    corpus.append((graph_from_edge_list(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5)]), "K3+P3"))
    corpus.append((graph_from_edge_list(4, [(0, 1), (1, 2)]), "P3+isolated"))
    return corpus


def run_suite(corpus: Sequence[tuple[Graph, str]] | None = None,
              m_values: Sequence[int] = (1, 2, 3, 4),
              tol: float = DEFAULT_TOL,
              seed: int = 42,
              *,
              partition_tol: float = PARTITION_TOL,
              eig_tol: float = DEFAULT_EIG_TOL,
              ) -> list[VerificationReport]:
    """Run every check over corpus x m_values.

    corpus=None builds default_corpus(seed); otherwise seed is unused.
    Failing comparisons are recorded in their reports, never raised.  The
    result is sorted by (graph descriptor, claim, m), so identical inputs
    produce identical report lists.
    """
    if corpus is None:
        corpus = default_corpus(seed)
    if not corpus:
        raise ValueError("corpus must be nonempty")
    reports: list[VerificationReport] = []
    for g, descriptor in corpus:
        base = _graph_spectrum(g, eig_tol)
        reports.append(verify_energy_partition(
            g, partition_tol, descriptor=descriptor, spectrum=base))
        for m in m_values:
            splitting_spectrum = _graph_spectrum(m_splitting(g, m), eig_tol)
            shadow_spectrum = _graph_spectrum(m_shadow(g, m), eig_tol)
            reports.append(verify_splitting_theorem(
                g, m, tol, descriptor=descriptor,
                base_spectrum=base, derived_spectrum=splitting_spectrum))
            reports.append(verify_shadow_theorem(
                g, m, tol, descriptor=descriptor,
                base_spectrum=base, derived_spectrum=shadow_spectrum))
            reports.extend(verify_total_energy_factors(
                g, m, tol, descriptor=descriptor, base_spectrum=base,
                splitting_spectrum=splitting_spectrum, shadow_spectrum=shadow_spectrum))
            reports.extend(verify_spectrum_maps(
                g, m, tol, descriptor=descriptor, base_spectrum=base,
                splitting_spectrum=splitting_spectrum, shadow_spectrum=shadow_spectrum))
    reports.sort(key=lambda r: (r.graph_descriptor, r.claim_id, r.m))
    return reports
