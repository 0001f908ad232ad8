"""Frozen expected values shared by several test modules."""

# Frozen moment expansions, coefficient of each cumulant monomial.
MOMENT_GOLDENS = {
    1: {(("k2", 1),): "u"},
    2: {(("k4", 1),): "u*(t+1)*(u+1)", (("k2", 2),): "u*(t+u+1)"},
    3: {
        (("k6", 1),): "u*(t+1)*(u+1)*(t+2)*(u+2)",
        (("k2", 1), ("k4", 1)): "3*u*(t+1)*(u+1)*(t+u+2)",
        (("k2", 3),): "u*(t**2+u**2+3*t*u+3*t+3*u+2)",
    },
    4: {
        (("k8", 1),): "u*(t+1)*(u+1)*(t+2)*(u+2)*(t+3)*(u+3)",
        (("k2", 1), ("k6", 1)): "4*u*(t+1)*(u+1)*(t+2)*(u+2)*(t+u+3)",
        (("k4", 2),): "u*(t+1)*(u+1)*(t+u+3)*(2*t*u+3*t+3*u+6)",
        (("k2", 2), ("k4", 1)): "2*u*(t+1)*(u+1)*(3*t**2+3*u**2+8*t*u+15*t+15*u+18)",
        (("k2", 4),): "u*(u**3+t**3+6*t*u**2+6*t**2*u+6*t**2+6*u**2+17*t*u+11*t+11*u+6)",
    },
}

CUMULANT_GOLDENS = {
    1: {(("m2", 1),): "1/u"},
    2: {(("m4", 1),): "1/(u*(t+1)*(u+1))", (("m2", 2),): "-(t+u+1)/(u**2*(t+1)*(u+1))"},
    3: {
        (("m6", 1),): "1/(u*(t+1)*(u+1)*(t+2)*(u+2))",
        (("m2", 1), ("m4", 1)): "-3*(t+u+2)/(u**2*(t+1)*(u+1)*(t+2)*(u+2))",
        (("m2", 3),): "(2*t**2+2*u**2+3*t*u+6*t+6*u+4)/(u**3*(t+1)*(u+1)*(t+2)*(u+2))",
    },
}
