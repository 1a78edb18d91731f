"""Regenerate src/fuzzysumm/rules/default.rules.

Each rule constrains five of the eight features (a cyclic window of five
consecutive features) to one label:

* H or VH on all five      -> Important    (8 windows x 2 labels)
* L or VL on all five      -> Unimportant  (8 windows x 2 labels)
* M on all five            -> Average      (windows starting at f1, f3, f5, f7)

Inputs matching no rule defuzzify to the engine's 0.5 fallback (Average).

    python scripts/make_default_rules.py > src/fuzzysumm/rules/default.rules
"""
from fuzzysumm.fuzzy import INPUT_NAMES

WINDOW = 5


def window(start):
    return [INPUT_NAMES[(start + k) % len(INPUT_NAMES)] for k in range(WINDOW)]


def rule(names, label, consequent):
    conds = " AND ".join(f"{n} is {label}" for n in names)
    return f"IF {conds} THEN importance is {consequent}"


def main():
    print("# Default rule base for the eight sentence features.")
    print("# Generated by scripts/make_default_rules.py; edit that script, not this file.")
    print("# Each rule constrains a cyclic window of five consecutive features;")
    print("# features outside the window are don't-care.")
    groups = [
        ("Important", ("VH", "H"), range(len(INPUT_NAMES))),
        ("Unimportant", ("VL", "L"), range(len(INPUT_NAMES))),
        ("Average", ("M",), range(0, len(INPUT_NAMES), 2)),
    ]
    for consequent, labels, starts in groups:
        print()
        print(f"# {consequent}")
        for label in labels:
            for start in starts:
                print(rule(window(start), label, consequent))


if __name__ == "__main__":
    main()
