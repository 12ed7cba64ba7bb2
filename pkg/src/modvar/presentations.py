"""Canonical identity presentations used by the CLI examples and the
acceptance battery.  The .ids files shipped in presentations/ carry the
same systems."""

V1 = """# x^2 y z = x^2 z y with nilpotency degree 5
x^2 y z = x^2 z y
x1 x2 x3 x4 x5 = 0
"""

V2 = """# x y z^2 = y x z^2 with nilpotency degree 5
x y z^2 = y x z^2
x1 x2 x3 x4 x5 = 0
"""

V1_MEET_V2 = """# meet of the two permutation systems: both equations, nil degree 5
x^2 y z = x^2 z y
x y z^2 = y x z^2
x1 x2 x3 x4 x5 = 0
"""

# Variants with the letter-collapse consequences zeroed out; these satisfy
# condition (a) and exhibit the modular/modular/non-modular meet pattern.
V1_REPAIRED = """# x^2 y z = x^2 z y with the y->x collapse x^3 y = x^2 y x zeroed
x^2 y z = x^2 z y
x^3 y = 0
x1 x2 x3 x4 x5 = 0
"""

V2_REPAIRED = """# x y z^2 = y x z^2 with the z->x and z->y collapses zeroed
x y z^2 = y x z^2
x y x^2 = 0
x y^3 = 0
x1 x2 x3 x4 x5 = 0
"""

MEET_REPAIRED = """# meet of the repaired systems
x^2 y z = x^2 z y
x^3 y = 0
x y z^2 = y x z^2
x y x^2 = 0
x y^3 = 0
x1 x2 x3 x4 x5 = 0
"""

COMMUT_MODULAR = """# commutative with x^2 y = 0: a modular commutative variety
x y = y x
x^2 y = 0
x1 x2 x3 x4 x5 = 0
"""

COMMUT_NIL4 = """# commutative, nil degree 4, without x^2 y = 0: not modular
x y = y x
x1 x2 x3 x4 = 0
"""

PERMUT3 = (
    """x y z = z y x
x^2 y = 0
x1 x2 x3 x4 x5 = 0
""",
    """x y z = y z x
x^2 y = 0
x1 x2 x3 x4 x5 = 0
""",
    """x y z = y x z
x y z t = x z t y
x y^2 = 0
x1 x2 x3 x4 x5 = 0
""",
    """x y z = x z y
x y z t = y z x t
x^2 y = 0
x1 x2 x3 x4 x5 = 0
""",
)

ZERO_REDUCED = """# purely 0-reduced: always modular
x^2 y = 0
x1 x2 x3 x4 x5 = 0
"""

FILES = {
    "v1.ids": V1,
    "v2.ids": V2,
    "v1_meet_v2.ids": V1_MEET_V2,
    "v1_repaired.ids": V1_REPAIRED,
    "v2_repaired.ids": V2_REPAIRED,
    "v1_meet_v2_repaired.ids": MEET_REPAIRED,
    "commut_modular.ids": COMMUT_MODULAR,
    "commut_nil4.ids": COMMUT_NIL4,
    "permut3_1.ids": PERMUT3[0],
    "permut3_2.ids": PERMUT3[1],
    "permut3_3.ids": PERMUT3[2],
    "permut3_4.ids": PERMUT3[3],
    "zero_reduced.ids": ZERO_REDUCED,
}
