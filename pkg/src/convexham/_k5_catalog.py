"""Canonical K5 crossing forms. Generated by scripts/derive_k5_catalog.py."""

FORMS = {
    'I': (((1, 2), (3, 4)), ((1, 2), (3, 5)), ((1, 4), (2, 5)), ((1, 4), (3, 5)), ((2, 5), (3, 4))),
    'II': (((1, 2), (3, 4)), ((1, 2), (3, 5)), ((1, 4), (3, 5))),
    'III': (((1, 2), (3, 4)),),
    'V': (((1, 2), (3, 4)), ((1, 2), (3, 5)), ((1, 2), (4, 5)), ((1, 3), (4, 5)), ((2, 4), (3, 5))),
}
