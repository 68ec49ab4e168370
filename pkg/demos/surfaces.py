"""Two surface degenerations where the combinatorics alone fall short.

1. An elliptic surface built from E x E and a torsion point of order m:
   the fiber has two components meeting in one point, and the nearby-cycle
   covering over that point is non-trivial exactly for lambda != 1.
2. Two surface singularities with an elliptic tangent cone whose
   resolutions share one intersection lattice and one set of multiplicities.
   Their atlases differ only in which strata carry a trivial local system,
   and the top Jordan count changes from 3 to 2.

    python3 demos/surfaces.py
"""

from jordanmax import build_b_complex, build_c_complex, jordan_report, nu, theorem3_nu
from jordanmax.corpus import load_bundled


def elliptic():
    print("elliptic surface with torsion")
    for stem in ("ex4_1_m2", "ex4_1", "ex4_1_m5"):
        model, atlas = load_bundled(stem)
        m = model.vertical[0].multiplicity
        c = build_c_complex(model, m).dims
        b = build_b_complex(model, m, atlas).dims
        print(f"  m={m}: C dims {c}, B dims {b}")
        report = jordan_report(model, atlas)
        for row in report.rows:
            if row.j == 1 and row.source == "computed":
                print(f"    d={row.d} a={row.a}: nu^1={row.nu}")


def same_lattice():
    print("same lattice, two atlases")
    for stem in ("ex4_3A", "ex4_3B"):
        model, atlas = load_bundled(stem)
        c = build_c_complex(model, 3).dims
        b = build_b_complex(model, 3, atlas).dims
        direct = nu(model, atlas, 3, 1, 2)
        euler = theorem3_nu(model, atlas, 3)[2]
        print(f"  {stem}: C dims {c}, B dims {b}, nu^2 = {direct} (Euler shortcut {euler})")


if __name__ == "__main__":
    elliptic()
    same_lattice()
