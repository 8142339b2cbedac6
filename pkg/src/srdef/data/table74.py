"""Reference rows of the table of 74 edge-starred 3-spheres.

Each row: (name, vertices, facets, minus_chi_theta, final, comes_from)
where comes_from lists (parent, starred edge) using diagonal labels
``d{i}_{j}`` of the 7-gon and ``v{k}`` for the vertex added at step k.
The minus_chi_theta column is reference data only.
"""

TABLE_ROWS = [
    ("K1", 15, 47, 34, False, [("A7", ("d1_3", "d4_6"))]),
    ("K2", 15, 46, 44, False, [("A7", ("d1_3", "d4_7"))]),
    ("K3", 16, 51, 38, False, [("K1", ("d1_3", "d4_7"))]),
    ("K4", 16, 51, 38, False, [("K1", ("d1_4", "d5_7")), ("K2", ("d2_4", "d5_7"))]),
    ("K5", 16, 52, 28, False, [("K1", ("d1_6", "d2_4"))]),
    ("K6", 16, 51, 36, False, [("K1", ("d1_6", "d2_5")), ("K2", ("d1_6", "d3_5"))]),
    ("K7", 16, 52, 38, False, [("K2", ("d1_3", "d5_7"))]),
    ("K8", 16, 51, 36, False, [("K2", ("d1_4", "d5_7"))]),
    ("K9", 16, 50, 46, False, [("K2", ("d1_6", "d2_5"))]),
    ("K10", 17, 55, 40, False, [("K3", ("v1", "d4_7")), ("K7", ("v1", "d4_6")), ("K9", ("d1_3", "d4_6"))]),
    ("K11", 17, 56, 32, False, [("K3", ("d1_3", "d5_7"))]),
    ("K12", 17, 56, 32, False, [("K3", ("d1_4", "d5_7")), ("K4", ("d1_3", "d4_7"))]),
    ("K13", 17, 56, 32, False, [("K3", ("d1_6", "d2_4")), ("K5", ("d1_3", "d4_7"))]),
    ("K14", 17, 55, 40, False, [("K3", ("d1_6", "d2_5")), ("K6", ("d1_3", "d4_7"))]),
    ("K15", 17, 56, 32, False, [("K3", ("d1_6", "d3_5")), ("K5", ("d1_6", "d2_5"))]),
    ("K16", 17, 55, 42, False, [("K3", ("d2_7", "d3_6")), ("K4", ("d3_7", "d4_6"))]),
    ("K17", 17, 55, 44, False, [("K3", ("d3_7", "d4_6"))]),
    ("K18", 17, 56, 34, False, [("K4", ("d1_6", "d2_4")), ("K5", ("d1_4", "d5_7"))]),
    ("K19", 17, 56, 32, False, [("K4", ("d2_4", "d5_7")), ("K7", ("d1_4", "d5_7")), ("K8", ("d1_3", "d4_6"))]),
    ("K20", 17, 55, 42, False, [("K4", ("d2_7", "d3_6")), ("K9", ("d2_4", "d5_7"))]),
    ("K21", 17, 57, 24, False, [("K5", ("d1_6", "d4_6"))]),
    ("K22", 17, 56, 32, False, [("K6", ("d1_6", "d2_4")), ("K7", ("d1_6", "d3_5"))]),
    ("K23", 17, 56, 32, False, [("K8", ("d1_3", "d5_7"))]),
    ("K24", 17, 55, 38, False, [("K8", ("d2_6", "d3_5")), ("K9", ("d2_6", "d3_5"))]),
    ("K25", 18, 60, 36, False, [("K10", ("d1_4", "d5_7")), ("K12", ("d2_7", "d3_6")), ("K16", ("d1_4", "d5_7")), ("K19", ("d2_7", "d3_6")), ("K20", ("d1_3", "d4_7"))]),
    ("K26", 18, 59, 42, False, [("K10", ("d1_6", "d2_5")), ("K14", ("v1", "d4_7"))]),
    ("K27", 18, 60, 34, False, [("K10", ("d1_6", "d3_5")), ("K15", ("v1", "d4_7")), ("K22", ("v2", "d2_4"))]),
    ("K28", 18, 60, 36, False, [("K10", ("d3_7", "d4_6")), ("K17", ("v1", "d3_7"))]),
    ("K29", 18, 61, 28, False, [("K11", ("d1_4", "d5_7"))]),
    ("K30", 18, 61, 28, False, [("K11", ("d1_6", "d3_5")), ("K15", ("d1_3", "d5_7"))]),
    ("K31", 18, 60, 38, False, [("K11", ("d3_7", "d4_6")), ("K12", ("d3_7", "d4_6")), ("K16", ("d3_7", "d4_6")), ("K17", ("d1_3", "d5_7"))]),
    ("K32", 18, 61, 28, False, [("K12", ("d1_3", "d5_7")), ("K13", ("d1_4", "d5_7")), ("K18", ("d1_3", "d4_7"))]),
    ("K33", 18, 61, 28, False, [("K12", ("d2_4", "d5_7")), ("K19", ("d1_3", "d4_7"))]),
    ("K34", 18, 60, 36, False, [("K13", ("d1_6", "d2_5")), ("K15", ("d2_6", "d3_5"))]),
    ("K35", 18, 60, 38, False, [("K13", ("d3_7", "d4_6")), ("K15", ("d3_7", "d4_6")), ("K17", ("d1_6", "d2_4"))]),
    ("K36", 18, 60, 36, False, [("K14", ("d1_6", "d2_4")), ("K22", ("d1_3", "d4_7")), ("K23", ("v1", "d5_7"))]),
    ("K37", 18, 60, 36, False, [("K14", ("d1_6", "d3_5")), ("K22", ("d3_7", "d4_6"))]),
    ("K38", 18, 59, 46, False, [("K14", ("d3_7", "d4_6")), ("K17", ("d1_6", "d2_5"))]),
    ("K39", 18, 60, 36, False, [("K15", ("d1_6", "d2_5"))]),
    ("K40", 18, 60, 38, False, [("K15", ("d2_7", "d3_6")), ("K16", ("d1_6", "d3_5")), ("K18", ("d1_6", "d2_5"))]),
    ("K41", 18, 61, 30, True, [("K18", ("d1_6", "d4_6")), ("K21", ("d1_4", "d5_7"))]),
    ("K42", 18, 61, 26, False, [("K22", ("d1_5", "d2_4"))]),
    ("K43", 18, 61, 28, True, [("K22", ("d1_6", "d4_6"))]),
    ("K44", 18, 60, 34, False, [("K23", ("d2_6", "d3_5")), ("K24", ("d1_3", "d5_7"))]),
    ("K45", 19, 65, 32, True, [("K25", ("d2_4", "d5_7")), ("K33", ("d2_7", "d3_6"))]),
    ("K46", 19, 65, 32, True, [("K25", ("d3_7", "d4_6")), ("K28", ("d1_4", "d5_7")), ("K31", ("d2_7", "d4_6"))]),
    ("K47", 19, 64, 38, False, [("K26", ("d1_6", "d3_5")), ("K28", ("d1_6", "d2_5")), ("K37", ("v1", "d4_7")), ("K38", ("v1", "d3_7"))]),
    ("K48", 19, 64, 38, False, [("K27", ("d1_6", "d2_5")), ("K37", ("v3", "d3_5")), ("K39", ("v1", "d4_7"))]),
    ("K49", 19, 64, 38, False, [("K27", ("d2_6", "d3_5")), ("K34", ("v3", "d2_5")), ("K36", ("v3", "d2_4")), ("K44", ("v1", "d5_7"))]),
    ("K50", 19, 65, 30, False, [("K27", ("d3_7", "d4_6")), ("K28", ("d1_6", "d3_5")), ("K35", ("v1", "d3_7"))]),
    ("K51", 19, 65, 32, False, [("K29", ("v3", "d1_4")), ("K32", ("v3", "d1_3")), ("K34", ("d1_4", "d5_7")), ("K40", ("d2_6", "d3_5"))]),
    ("K52", 19, 66, 24, False, [("K29", ("d1_6", "d3_5")), ("K30", ("d1_4", "d5_7"))]),
    ("K53", 19, 66, 24, True, [("K29", ("d2_4", "d5_7"))]),
    ("K54", 19, 65, 34, False, [("K29", ("d3_7", "d4_6")), ("K30", ("d3_7", "d4_6")), ("K31", ("d1_4", "d5_7")), ("K32", ("d3_7", "d4_6")), ("K35", ("d1_4", "d5_7")), ("K40", ("d3_7", "d4_6"))]),
    ("K55", 19, 65, 32, False, [("K30", ("d1_6", "d2_5")), ("K39", ("d1_3", "d5_7"))]),
    ("K56", 19, 65, 32, False, [("K30", ("d2_6", "d3_5")), ("K34", ("d1_6", "d3_5"))]),
    ("K57", 19, 66, 24, False, [("K32", ("d1_6", "d2_4"))]),
    ("K58", 19, 64, 42, False, [("K34", ("d3_7", "d4_6")), ("K35", ("d1_6", "d2_5")), ("K39", ("d2_6", "d3_5"))]),
    ("K59", 19, 64, 42, False, [("K36", ("d3_7", "d4_6")), ("K37", ("d3_7", "d4_6")), ("K38", ("d1_6", "d2_4"))]),
    ("K60", 19, 65, 30, False, [("K37", ("d2_6", "d3_5")), ("K42", ("d3_7", "d4_6"))]),
    ("K61", 19, 64, 42, False, [("K39", ("d2_7", "d3_6")), ("K40", ("d1_6", "d2_5"))]),
    ("K62", 20, 68, 40, False, [("K47", ("v4", "d3_5")), ("K48", ("v4", "d2_5"))]),
    ("K63", 20, 69, 32, False, [("K47", ("d2_6", "d3_5")), ("K50", ("v3", "d3_7")), ("K60", ("v1", "d4_7"))]),
    ("K64", 20, 69, 34, False, [("K47", ("d3_7", "d4_6")), ("K59", ("v1", "d3_7"))]),
    ("K65", 20, 68, 44, False, [("K48", ("v4", "d2_5")), ("K49", ("d1_6", "d2_5")), ("K58", ("v3", "d2_5")), ("K59", ("v3", "d2_4"))]),
    ("K66", 20, 69, 34, False, [("K48", ("d3_7", "d4_6")), ("K50", ("d1_6", "d2_5")), ("K58", ("v1", "d3_7"))]),
    ("K67", 20, 69, 38, True, [("K51", ("d3_7", "d4_6")), ("K54", ("v3", "d1_4")), ("K55", ("d3_7", "d4_6")), ("K58", ("d1_4", "d5_7")), ("K61", ("d2_6", "d3_5"))]),
    ("K68", 20, 70, 28, True, [("K52", ("d2_6", "d3_5")), ("K56", ("d1_4", "d5_7"))]),
    ("K69", 20, 70, 30, True, [("K52", ("d3_7", "d4_6")), ("K54", ("d1_6", "d3_5")), ("K57", ("d3_7", "d4_6"))]),
    ("K70", 20, 69, 38, True, [("K55", ("d2_6", "d3_5")), ("K56", ("d1_6", "d2_5")), ("K58", ("d1_6", "d3_5"))]),
    ("K71", 20, 69, 34, False, [("K60", ("v3", "d3_5"))]),
    ("K72", 21, 73, 36, False, [("K62", ("d2_6", "d3_5")), ("K64", ("v3", "d3_7")), ("K65", ("v4", "d2_5")), ("K66", ("v4", "d2_5"))]),
    ("K73", 21, 73, 36, False, [("K63", ("v4", "v6")), ("K66", ("v3", "d3_7")), ("K71", ("v1", "d4_7"))]),
    ("K74", 22, 77, 38, True, [("K72", ("v6", "d2_6")), ("K73", ("v4", "v6"))]),
]

# Corrections to printed entries that are inconsistent with the rest of
# the table. Each replaces the facet count or one arrival edge; the
# arrival index refers to the position in the row's comes_from list.
ERRATA = {
    # the starred edge meets 5 facets of a 46-facet parent
    "K7": {"facets": 51, "comes_from": {0: ("K2", ("d1_3", "d4_6"))}},
    # printed edge is the arrival of K62 from the same parent
    "K65": {"comes_from": {0: ("K48", ("d2_6", "d3_5"))}},
    # {v4, v6} is not a legal edge of K63
    "K73": {"comes_from": {0: ("K63", ("d3_5", "v4"))}},
}
