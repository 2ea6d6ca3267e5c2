from functools import lru_cache

from freesurf.classify import AnalysisConfig, classify_surface
from freesurf.jacobian import ar_module, build_surface
from freesurf.polyring import parse_polynomial

CORPUS = {
    "ex2.8i": "(x*w+y^2)^2+y^2*z^2",
    "ex2.8ii": "(x^2+y^2+z*w)^4+y^4*z^4",
    "ex2.8iii": "w*(x+y)*(y+z)*(x+z)*(y-2*z)*(x+2*y+3*z)*(11*x+7*y+5*z+3*w)",
    "ex5.4": "x^12+x^11*y+y^11*z+w*(x^10*w+y^10*z)",
    "xyzw": "x*y*z*w",
    "smooth-quadric": "x^2+y^2+z^2+w^2",
}
ADMISSIBLE = [k for k in CORPUS if k != "smooth-quadric"]

# free and nearly free surfaces found by search, certified by the resolution shape
EXTRA = {
    "free-arrangement": "x*y*z*w*(x+y)",
    "free-arrangement-2": "x*y*(x+y)*z*w*(z+w)",
    "nearly-free-arrangement": "x*y*z*w*(x+y+z)",
    "nearly-free-quartic": "y*z^3+x*z*w^2",
    "nearly-free-quintic": "x^2*z^2*w+y^3*w^2",
}
ALL = {**CORPUS, **EXTRA}


@lru_cache(maxsize=None)
def poly(name):
    return parse_polynomial(ALL.get(name, name))


@lru_cache(maxsize=None)
def surface(name):
    return build_surface(poly(name), check=False)


@lru_cache(maxsize=None)
def ar(name):
    return ar_module(surface(name))


@lru_cache(maxsize=None)
def report(name, seed=0):
    return classify_surface(poly(name), AnalysisConfig(seed=seed))


def check(rep, name):
    c = rep.check(name)
    assert c is not None, name
    return c


# one summary line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
