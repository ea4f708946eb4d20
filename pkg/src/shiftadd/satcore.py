"""CNF construction and a pluggable satisfiability backend with timeouts.

Clauses are lists of nonzero signed variable indices in DIMACS convention
(negative literal = negated variable). The default backend is the embedded
CDCL solver in `cdcl`; an external DIMACS solver binary can be selected via
the SHIFTADD_SAT_SOLVER environment variable or the `backend` argument.
Every satisfiable outcome is re-checked against the clause list before it
is returned.
"""

from __future__ import annotations

import os
import subprocess
import tempfile
import time
from dataclasses import dataclass, field

from . import cdcl

SAT = "satisfiable"
UNSAT = "unsatisfiable"
TIMEOUT = "timeout"

BACKEND_ENV = "SHIFTADD_SAT_SOLVER"


class SatBackendError(RuntimeError):
    """Launch or protocol failure of an external solver (not a timeout)."""


@dataclass
class SatOutcome:
    status: str
    model: dict[int, bool] | None = None

    @property
    def is_sat(self) -> bool:
        return self.status == SAT

    @property
    def is_unsat(self) -> bool:
        return self.status == UNSAT


@dataclass
class CnfFormula:
    variable_count: int = 0
    clauses: list[list[int]] = field(default_factory=list)
    trivially_false: bool = False

    def new_var(self) -> int:
        self.variable_count += 1
        return self.variable_count

    def new_vars(self, n: int) -> list[int]:
        return [self.new_var() for _ in range(n)]

    def add_clause(self, lits) -> None:
        clause = list(lits)
        for lit in clause:
            if lit == 0 or abs(lit) > self.variable_count:
                raise ValueError(f"literal {lit} out of range")
        if not clause:
            self.trivially_false = True
        self.clauses.append(clause)

    def at_most_one(self, lits) -> None:
        """Pairwise at-most-one over the given literals."""
        lits = list(lits)
        for i in range(len(lits)):
            for j in range(i + 1, len(lits)):
                self.add_clause([-lits[i], -lits[j]])

    def exactly_one(self, lits) -> None:
        lits = list(lits)
        self.add_clause(lits)
        self.at_most_one(lits)

    def emit_dimacs(self) -> str:
        lines = [f"p cnf {self.variable_count} {len(self.clauses)}"]
        for clause in self.clauses:
            lines.append(" ".join(str(lit) for lit in clause) + " 0")
        return "\n".join(lines) + "\n"

    def check_model(self, model: dict[int, bool]) -> bool:
        for clause in self.clauses:
            if not any(model.get(abs(lit), False) == (lit > 0) for lit in clause):
                return False
        return True


def parse_dimacs(text: str) -> CnfFormula:
    formula = CnfFormula()
    declared = None
    pending: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"line {lineno}: bad problem line {line!r}")
            declared = int(parts[3])
            formula.variable_count = int(parts[2])
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                formula.clauses.append(pending)
                if not pending:
                    formula.trivially_false = True
                pending = []
            else:
                if abs(lit) > formula.variable_count:
                    formula.variable_count = abs(lit)
                pending.append(lit)
    if pending:
        formula.clauses.append(pending)
    if declared is not None and declared != len(formula.clauses):
        # tolerated: many generators emit an approximate count
        pass
    return formula


def _solve_embedded(formula: CnfFormula, timeout: float | None) -> SatOutcome:
    packed = []
    for clause in formula.clauses:
        packed.append([2 * lit if lit > 0 else 2 * -lit + 1 for lit in clause])
    solver = cdcl.Solver(formula.variable_count, packed)
    deadline = None if timeout is None else time.monotonic() + timeout
    status, assigns = solver.solve(deadline)
    if status == "sat":
        model = {v: assigns[v] == 1 for v in range(1, formula.variable_count + 1)}
        return SatOutcome(SAT, model)
    if status == "unsat":
        return SatOutcome(UNSAT)
    return SatOutcome(TIMEOUT)


def _solve_subprocess(formula: CnfFormula, timeout: float | None, binary: str) -> SatOutcome:
    with tempfile.NamedTemporaryFile("w", suffix=".cnf", delete=False) as handle:
        handle.write(formula.emit_dimacs())
        path = handle.name
    try:
        try:
            proc = subprocess.run(
                [binary, path],
                capture_output=True,
                text=True,
                timeout=timeout,
            )
        except subprocess.TimeoutExpired:
            return SatOutcome(TIMEOUT)
        except OSError as exc:
            raise SatBackendError(f"cannot run solver {binary!r}: {exc}") from exc
        status = None
        values: list[int] = []
        for line in proc.stdout.splitlines():
            if line.startswith("s "):
                status = line[2:].strip()
            elif line.startswith("v "):
                values.extend(int(tok) for tok in line[2:].split())
        if status == "SATISFIABLE":
            model = {v: False for v in range(1, formula.variable_count + 1)}
            for lit in values:
                if lit != 0:
                    model[abs(lit)] = lit > 0
            return SatOutcome(SAT, model)
        if status == "UNSATISFIABLE":
            return SatOutcome(UNSAT)
        if proc.returncode == 10:
            return SatOutcome(SAT, {v: False for v in range(1, formula.variable_count + 1)})
        if proc.returncode == 20:
            return SatOutcome(UNSAT)
        raise SatBackendError(
            f"solver {binary!r} gave no verdict (exit {proc.returncode})"
        )
    finally:
        os.unlink(path)


def solve(formula: CnfFormula, timeout: float | None = None, backend: str | None = None) -> SatOutcome:
    """Solve a formula; on SAT the model is verified against every clause."""
    if formula.trivially_false:
        return SatOutcome(UNSAT)
    if timeout is not None and timeout <= 0:
        return SatOutcome(TIMEOUT)
    binary = backend if backend is not None else os.environ.get(BACKEND_ENV)
    if binary:
        outcome = _solve_subprocess(formula, timeout, binary)
    else:
        outcome = _solve_embedded(formula, timeout)
    if outcome.is_sat:
        assert outcome.model is not None
        if not formula.check_model(outcome.model):
            raise SatBackendError("backend returned a model that fails the formula")
    return outcome
