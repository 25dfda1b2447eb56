"""End-to-end smoke test of the python bindings."""

import math

import numpy as np

import landaulab as L


def scenario(gamma=0.0, n=16):
    g = L.make_grid(2, 6.0, n)
    sp = L.make_species_set([1.0, 2.0], [[1, 1], [1, 1]],
                            [[gamma, gamma], [gamma, gamma]], 2)
    f1 = L.maxwellian(g, 1.0, 1.0, [0.5, 0.0], 0.5)
    f2 = L.maxwellian(g, 2.0, 1.0, [-0.5, 0.0], 2.0)
    return L.make_state(sp, g, [f1, f2])


def main():
    st = scenario()
    mom = L.moments(st)
    assert abs(mom["n"][0] - 1.0) < 1e-2
    assert abs(mom["P"][0] + 0.5) < 1e-2

    # structural identities through the bindings
    r = [np.asarray(x) for x in L.rhs(st)]
    cp = {(i, j): np.asarray(L.collision_pair(st, i, j))
          for i in range(2) for j in range(2)}
    for i in range(2):
        gap = np.abs(r[i] - cp[(i, 0)] - cp[(i, 1)]).max()
        assert gap < 1e-12 * np.abs(r[i]).max(), gap

    d = L.diagnostics(st)
    assert d["entropy_dissipation"] > 0
    assert abs(d["breakdown"]["total"] - d["fisher_dissipation"]) \
        < 1e-12 * abs(d["fisher_dissipation"])

    # a short run decays H and conserves the invariants
    res = L.run(st, "landau", "rk4", 1e-3, 0.05, 10, True)
    recs = res["records"]
    assert len(recs) == 6
    H = [rec["H"] for rec in recs]
    assert all(H[k + 1] <= H[k] + 1e-12 * abs(H[k]) for k in range(len(H) - 1))
    n0 = recs[0]["moments"]["n"]
    nT = recs[-1]["moments"]["n"]
    assert abs(nT[0] / n0[0] - 1) < 1e-12 and abs(nT[1] / n0[1] - 1) < 1e-12
    assert not res["clamping_flagged"]

    # thresholds and sphere pins
    assert abs(L.admissible_threshold(3, False) - 2 * math.sqrt(2)) < 1e-12
    assert abs(L.admissible_threshold(3, True) - 2 * math.sqrt(5.5)) < 1e-12
    lv = [1e-5 * math.cos(2 * math.pi * k / 256) for k in range(256)]
    assert abs(L.sphere_ratio(L.circle_field(lv, False)) - 1.0) < 1e-3
    verdict = L.check_inequality(L.circle_field(lv, False), False, 1e-8)
    assert verdict["pass"]

    # config parsing and error mapping
    st2 = L.parse_config("""{
      "dim": 2,
      "grid": {"extent": 6.0, "points_per_axis": 16},
      "species": [{"mass": 1.0, "initial": [{"n": 1.0, "u": [0, 0], "theta": 1.0}]}],
      "couplings": [[1.0]],
      "exponents": [[0.0]],
      "run": {"flow": "landau", "scheme": "rk4", "dt": 1e-3, "t_end": 0.0,
              "diagnostics_every": 1, "floor": 1e-30, "deterministic_reduction": true}
    }""")
    assert st2.species.count == 1
    try:
        L.make_grid(2, -1.0, 16)
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError from ParameterError")

    print("smoke test ok")


if __name__ == "__main__":
    main()
