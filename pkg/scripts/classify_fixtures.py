"""Print the classification table for the named example semigroups."""
from __future__ import annotations

from dataclasses import dataclass

from hsemi.classes import FLAGS, classify
from hsemi.constructions import (
    cyclic_group,
    group_adjoin,
    paper_example_s7,
    rectangular_band,
    semilattice_chain,
    symmetric_inverse_monoid,
)


@dataclass(frozen=True)
class Fixture:
    name: str
    build: object


FIXTURES = (
    Fixture("S7", paper_example_s7),
    Fixture("I1", lambda: symmetric_inverse_monoid(1)[0]),
    Fixture("I2", lambda: symmetric_inverse_monoid(2)[0]),
    Fixture("I3", lambda: symmetric_inverse_monoid(3)[0]),
    Fixture("Z2+a", lambda: group_adjoin(cyclic_group(2), 1)),
    Fixture("Z3", lambda: cyclic_group(3)),
    Fixture("B(2,2)", lambda: rectangular_band(2, 2)),
    Fixture("chain3", lambda: semilattice_chain(3)),
)


def main() -> None:
    # column headers are initials, e.g. h_inverse_closed -> hic
    short = {k: "".join(w[0] for w in k.split("_")) if "_" in k else k[:4] for k in FLAGS}
    for k in FLAGS:
        print(f"  {short[k]:5s} {k}")
    print(f"{'':8s} " + " ".join(f"{short[k]:>5s}" for k in FLAGS))
    for fx in FIXTURES:
        flags = classify(fx.build()).flags
        cell = lambda v: "-" if v is None else ("yes" if v else "no")  # noqa: E731
        print(f"{fx.name:8s} " + " ".join(f"{cell(flags[k]):>5s}" for k in FLAGS))


if __name__ == "__main__":
    main()
