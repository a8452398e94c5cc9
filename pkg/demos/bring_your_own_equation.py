"""Run the solver on equations you write yourself.

Two small cases: one where the catalytic variable plays no role (the
series is classical) and one showing what happens when certification
is skipped.
"""

from tuttesolve import PipelineConfig, run_pipeline


def solve_and_summarize(equation: str, **kw) -> None:
    cfg = PipelineConfig(equation, **kw)
    report = run_pipeline(cfg)
    status = "proven" if report.proven else "conjectural"
    print(f"equation:   {equation}")
    print(f"status:     {status}")
    print(f"g-equation: {report.p1.render()}")
    print(f"recurrence: {report.recurrence.render()}")
    print(f"value:      a({report.value.index}) = {report.value}")
    print()


def main() -> None:
    # psi = 1 + x*psi^2 forces the Catalan numbers
    solve_and_summarize("psi - 1 - x*psi**2",
                        guess_order=20, max_complexity=4, eval_at=30)

    # same equation without the a-posteriori proof: everything downstream
    # is labeled conjectural and the exit path reports it as such
    solve_and_summarize("psi - 1 - x*psi**2",
                        guess_order=20, max_complexity=4, eval_at=30,
                        prove=False)

    # a geometric one-liner
    solve_and_summarize("psi - 1 - 2*x*psi",
                        guess_order=12, max_complexity=3, eval_at=16)


if __name__ == "__main__":
    main()
