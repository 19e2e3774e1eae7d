from kfcert.core.config.schema import CampaignConfig, GridSpec
from kfcert.core.extremal import ExtremalParams, construct_extremal, extremal_edge_count, thm4_threshold
from kfcert.core.formats import serialize_graph6
from kfcert.core.services import LoggerService
from kfcert.core.spectral import extremal_quotient_rho
from kfcert.core.verification.campaign import search_counterexample
from kfcert.core.verification.theorems import verify_thm4, verify_thm5


def main():
    LoggerService.from_environment(level="INFO")

    params = ExtremalParams.of(n=17, t=1, k=1)
    graph = construct_extremal(params)
    print(f"Extremal graph for n={params.n}, t={params.t}, k={params.k}: {serialize_graph6(graph)}")
    print(f"  edges={extremal_edge_count(params)}  edge threshold={thm4_threshold(params)}")
    print(f"  rho={extremal_quotient_rho(params):.10f}")

    for report in (verify_thm4(graph, params.t, params.k), verify_thm5(graph, params.t, params.k)):
        print(f"  {report.theorem.value}: {report.conclusion.value}")

    print("\nRunning a small counterexample search...")
    config = CampaignConfig(grid=GridSpec(t=[1, 2]), samples=50, seed=2024)
    report = search_counterexample(config)
    for cell in report.cells:
        counts = ", ".join(f"{c.value}={v}" for c, v in cell.counts.items() if v)
        print(f"  n={cell.params.n} t={cell.params.t} k={cell.params.k}: {counts}")
    print(f"Violations: {report.violations}")


if __name__ == "__main__":
    main()
