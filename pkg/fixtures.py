"""
Printed reference data for the small-rank simple algebras.

Each entry holds the reduced Weyl vector (twice its coefficients over the
simple roots, so everything stays integral) and the layer polynomial as a
sympy expression in the Dynkin labels l1..lr. These are compared against
freshly computed values by the ``fixtures`` check and by the tests.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Tuple

import sympy

from layercalc import layer_polynomial
from polyring import MultiPoly, from_sympy
from rootsystem import rho_prime_root_basis, root_system

# Twice the root-basis coefficients of rho'.
RHO_PRIME_DOUBLED: Dict[str, Tuple[int, ...]] = {
    "A1": (0,),
    "A2": (1, 1),
    "B2": (2, 3),
    "G2": (5, 9),
    "A3": (2, 3, 2),
    "B3": (4, 7, 8),
    "C3": (5, 9, 5),
    "A4": (3, 5, 5, 3),
    "B4": (6, 11, 14, 15),
    "C4": (7, 13, 17, 9),
    "D4": (5, 9, 5, 5),
    "F4": (15, 29, 41, 21),
    "A5": (4, 7, 8, 7, 4),
}

LAYER_POLYNOMIALS: Dict[str, str] = {
    "A1": "1+l1",
    "A2": "1+(3/2)*(l1+l2)+(1/2)*(l1**2+l2**2+4*l1*l2)",
    "B2": "1+2*(l1+l2)+(2*l1**2+l2**2+4*l1*l2)",
    "G2": "1+3*(l1+l2)+3*(3*l1**2+l2**2+4*l1*l2)",
    "A3": (
        "1+(1/6)*(11*l1+14*l2+11*l3)+(l1**2+2*l2**2+l3**2+4*l1*l2+4*l2*l3"
        "+3*l1*l3)+(1/6)*(l1**3+4*l2**3+l3**3+6*l1**2*l2+12*l1*l2**2"
        "+12*l2**2*l3+6*l2*l3**2+9*l1**2*l3+9*l1*l3**2+36*l1*l2*l3)"
    ),
    "B3": (
        "1+(1/3)*(8*l1+10*l2+9*l3)+(2*l1**2+8*l2**2+3*l3**2+8*l1*l2"
        "+12*l2*l3+6*l1*l3)+(1/3)*(4*l1**3+20*l2**3+3*l3**3+24*l1**2*l2"
        "+48*l1*l2**2+36*l2**2*l3+18*l2*l3**2+18*l1**2*l3+18*l1*l3**2"
        "+72*l1*l2*l3)"
    ),
    "C3": (
        "1+(1/3)*(7*l1+11*l2+9*l3)+(2*l1**2+5*l2**2+6*l3**2+8*l1*l2"
        "+12*l2*l3+6*l1*l3)+(2/3)*(l1**3+5*l2**3+6*l3**3+6*l1**2*l2"
        "+12*l1*l2**2+18*l2**2*l3+18*l2*l3**2+9*l1**2*l3+18*l1*l3**2"
        "+36*l1*l2*l3)"
    ),
    "A4": (
        "1+(5/12)*(5*l1+7*l2+7*l3+5*l4)+(5/24)*(7*l1**2+17*l2**2+17*l3**2"
        "+7*l4**2+28*l1*l2+40*l2*l3+28*l3*l4+26*l1*l3+26*l2*l4+20*l1*l4)"
        "+(5/12)*(l1**3+5*l2**3+5*l3**3+l4**3+6*l1**2*l2+12*l1*l2**2"
        "+18*l2**2*l3+18*l2*l3**2+12*l3**2*l4+6*l3*l4**2+9*l1**2*l3"
        "+15*l1*l3**2+15*l2**2*l4+9*l2*l4**2+6*l1**2*l4+6*l1*l4**2"
        "+36*l1*l2*l3+36*l2*l3*l4+24*l1*l2*l4+24*l1*l3*l4)+(1/24)*(l1**4"
        "+11*l2**4+11*l3**4+l4**4+8*l1**3*l2+32*l1*l2**3+56*l2**3*l3"
        "+56*l2*l3**3+32*l3**3*l4+8*l3*l4**3+12*l1**3*l3+68*l1*l3**3"
        "+68*l2**3*l4+12*l2*l4**3+16*l1**3*l4+16*l1*l4**3+24*l1**2*l2**2"
        "+96*l2**2*l3**2+24*l3**2*l4**2+54*l1**2*l3**2+54*l2**2*l4**2"
        "+36*l1**2*l4**2+72*l1**2*l2*l3+144*l1*l2**2*l3+216*l1*l2*l3**2"
        "+216*l2**2*l3*l4+144*l2*l3**2*l4+72*l2*l3*l4**2+96*l1**2*l2*l4"
        "+192*l1*l2**2*l4+144*l1*l2*l4**2+144*l1**2*l3*l4+192*l1*l3**2*l4"
        "+96*l1*l3*l4**2+576*l1*l2*l3*l4)"
    ),
    "B4": (
        "1+(4/3)*(2*l1+4*l2+3*l3+3*l4)+(2/3)*(5*l1**2+12*l2**2+25*l3**2"
        "+9*l4**2+20*l1*l2+28*l2*l3+36*l3*l4+18*l1*l3+20*l2*l4+16*l1*l4)"
        "+(4/3)*(l1**3+8*l2**3+21*l3**3+3*l4**3+6*l1**2*l2+12*l1*l2**2"
        "+36*l2**2*l3+54*l2*l3**2+36*l3**2*l4+18*l3*l4**2+9*l1**2*l3"
        "+27*l1*l3**2+24*l2**2*l4+18*l2*l4**2+6*l1**2*l4+9*l1*l4**2"
        "+36*l1*l2*l3+72*l2*l3*l4+24*l1*l2*l4+36*l1*l3*l4)+(1/3)*(2*l1**4"
        "+24*l2**4+46*l3**4+3*l4**4+16*l1**3*l2+64*l1*l2**3+128*l2**3*l3"
        "+176*l2*l3**3+96*l3**3*l4+24*l3*l4**3+24*l1**3*l3+168*l1*l3**3"
        "+80*l2**3*l4+24*l2*l4**3+16*l1**3*l4+24*l1*l4**3+48*l1**2*l2**2"
        "+240*l2**2*l3**2+72*l3**2*l4**2+108*l1**2*l3**2+72*l2**2*l4**2"
        "+36*l1**2*l4**2+144*l1**2*l2*l3+288*l1*l2**2*l3+432*l1*l2*l3**2"
        "+288*l2**2*l3*l4+288*l2*l3**2*l4+144*l2*l3*l4**2+96*l1**2*l2*l4"
        "+192*l1*l2**2*l4+144*l1*l2*l4**2+144*l1**2*l3*l4+288*l1*l3**2*l4"
        "+144*l1*l3*l4**2+576*l1*l2*l3*l4)"
    ),
    "C4": (
        "1+(4/3)*(2*l1+3*l2+4*l3+3*l4)+(2/3)*(4*l1**2+12*l2**2+17*l3**2"
        "+18*l4**2+16*l1*l2+32*l2*l3+36*l3*l4+18*l1*l3+20*l2*l4+16*l1*l4)"
        "+(4/3)*(l1**3+6*l2**3+11*l3**3+12*l4**3+6*l1**2*l2+12*l1*l2**2"
        "+24*l2**2*l3+30*l2*l3**2+36*l3**2*l4+36*l3*l4**2+9*l1**2*l3"
        "+18*l1*l3**2+24*l2**2*l4+36*l2*l4**2+6*l1**2*l4+18*l1*l4**2"
        "+36*l1*l2*l3+72*l2*l3*l4+24*l1*l2*l4+36*l1*l3*l4)+(1/3)*(l1**4"
        "+12*l2**4+23*l3**4+24*l4**4+8*l1**3*l2+32*l1*l2**3+64*l2**3*l3"
        "+88*l2*l3**3+96*l3**3*l4+96*l3*l4**3+12*l1**3*l3+84*l1*l3**3"
        "+80*l2**3*l4+96*l2*l4**3+16*l1**3*l4+96*l1*l4**3+24*l1**2*l2**2"
        "+120*l2**2*l3**2+144*l3**2*l4**2+54*l1**2*l3**2+144*l2**2*l4**2"
        "+72*l1**2*l4**2+72*l1**2*l2*l3+144*l1*l2**2*l3+216*l1*l2*l3**2"
        "+288*l2**2*l3*l4+288*l2*l3**2*l4+288*l2*l3*l4**2+96*l1**2*l2*l4"
        "+192*l1*l2**2*l4+288*l1*l2*l4**2+144*l1**2*l3*l4+288*l1*l3**2*l4"
        "+288*l1*l3*l4**2+576*l1*l2*l3*l4)"
    ),
    "D4": (
        "1+(4/3)*(2*l1+3*l2+2*l3+2*l4)+(2/3)*(4*l1**2+12*l2**2+4*l3**2"
        "+4*l4**2+16*l1*l2+16*l2*l3+9*l3*l4+9*l1*l3+16*l2*l4+9*l1*l4)"
        "+(2/3)*(2*l1**3+12*l2**3+2*l3**3+2*l4**3+12*l1**2*l2+24*l1*l2**2"
        "+24*l2**2*l3+12*l2*l3**2+9*l3**2*l4+9*l3*l4**2+9*l1**2*l3"
        "+9*l1*l3**2+24*l2**2*l4+12*l2*l4**2+9*l1**2*l4+9*l1*l4**2"
        "+36*l1*l2*l3+36*l2*l3*l4+36*l1*l2*l4+18*l1*l3*l4)+(1/3)*(l1**4"
        "+12*l2**4+l3**4+l4**4+8*l1**3*l2+32*l1*l2**3+32*l2**3*l3"
        "+8*l2*l3**3+6*l3**3*l4+6*l3*l4**3+6*l1**3*l3+6*l1*l3**3"
        "+32*l2**3*l4+8*l2*l4**3+6*l1**3*l4+6*l1*l4**3+24*l1**2*l2**2"
        "+24*l2**2*l3**2+9*l3**2*l4**2+9*l1**2*l3**2+24*l2**2*l4**2"
        "+9*l1**2*l4**2+36*l1**2*l2*l3+72*l1*l2**2*l3+36*l1*l2*l3**2"
        "+72*l2**2*l3*l4+36*l2*l3**2*l4+36*l2*l3*l4**2+36*l1**2*l2*l4"
        "+72*l1*l2**2*l4+36*l1*l2*l4**2+36*l1**2*l3*l4+36*l1*l3**2*l4"
        "+36*l1*l3*l4**2+144*l1*l2*l3*l4)"
    ),
    "F4": (
        "1+4*(2*l1+l2+2*l3+l4)+2*(4*l1**2+22*l2**2+13*l3**2+4*l4**2"
        "+16*l1*l2+36*l2*l3+16*l3*l4+16*l1*l3+8*l2*l4+12*l1*l4)+4*(4*l1**3"
        "+32*l2**3+13*l3**3+2*l4**3+24*l1**2*l2+48*l1*l2**2+72*l2**2*l3"
        "+54*l2*l3**2+24*l3**2*l4+12*l3*l4**2+18*l1**2*l3+24*l1*l3**2"
        "+42*l2**2*l4+18*l2*l4**2+6*l1**2*l4+6*l1*l4**2+72*l1*l2*l3"
        "+72*l2*l3*l4+24*l1*l2*l4+24*l1*l3*l4)+2*(8*l1**4+116*l2**4"
        "+29*l3**4+2*l4**4+64*l1**3*l2+256*l1*l2**3+336*l2**3*l3"
        "+168*l2*l3**3+64*l3**3*l4+16*l3*l4**3+48*l1**3*l3+104*l1*l3**3"
        "+208*l2**3*l4+24*l2*l4**3+32*l1**3*l4+16*l1*l4**3+192*l1**2*l2**2"
        "+360*l2**2*l3**2+48*l3**2*l4**2+108*l1**2*l3**2+108*l2**2*l4**2"
        "+36*l1**2*l4**2+288*l1**2*l2*l3+576*l1*l2**2*l3+432*l1*l2*l3**2"
        "+432*l2**2*l3*l4+288*l2*l3**2*l4+144*l2*l3*l4**2+192*l1**2*l2*l4"
        "+384*l1*l2**2*l4+144*l1*l2*l4**2+144*l1**2*l3*l4+192*l1*l3**2*l4"
        "+96*l1*l3*l4**2+576*l1*l2*l3*l4)"
    ),
    "A5": (
        "1+(1/60)*(137*l1+202*l2+222*l3+202*l4+137*l5)+(5/8)*(3*l1**2"
        "+8*l2**2+10*l3**2+8*l4**2+3*l5**2+12*l1*l2+20*l2*l3+20*l3*l4"
        "+12*l4*l5+12*l1*l3+16*l2*l4+12*l3*l5+12*l1*l4+12*l2*l5+8*l1*l5)"
        "+(1/24)*(17*l1**3+94*l2**3+138*l3**3+94*l4**3+17*l5**3"
        "+102*l1**2*l2+204*l1*l2**2+360*l2**2*l3+414*l2*l3**2+414*l3**2*l4"
        "+360*l3*l4**2+204*l4**2*l5+102*l4*l5**2+153*l1**2*l3+294*l1*l3**2"
        "+358*l2**2*l4+358*l2*l4**2+294*l3**2*l5+153*l3*l5**2+124*l1**2*l4"
        "+236*l1*l4**2+236*l2**2*l5+124*l2*l5**2+95*l1**2*l5+95*l1*l5**2"
        "+612*l1*l2*l3+936*l2*l3*l4+612*l3*l4*l5+496*l1*l2*l4+564*l1*l3*l4"
        "+564*l2*l3*l5+496*l2*l4*l5+380*l1*l2*l5+380*l1*l4*l5+360*l1*l3*l5)"
        "+((1/8)*(l1**4+12*l2**4+22*l3**4+12*l4**4+l5**4)+(1/4)*(4*l1**3*l2"
        "+16*l1*l2**3+32*l2**3*l3+44*l2*l3**3+44*l3**3*l4+32*l3*l4**3"
        "+16*l4**3*l5+4*l4*l5**3+6*l1**3*l3+39*l1*l3**3+40*l2**3*l4"
        "+40*l2*l4**3+39*l3**3*l5+6*l3*l5**3+8*l1**3*l4+28*l1*l4**3"
        "+28*l2**3*l5+8*l2*l5**3+5*l1**3*l5+5*l1*l5**3+12*l1**2*l2**2"
        "+60*l2**2*l3**2+60*l3**2*l4**2+12*l4**2*l5**2+27*l1**2*l3**2"
        "+64*l2**2*l4**2+27*l3**2*l5**2+28*l1**2*l4**2+28*l2**2*l5**2"
        "+10*l1**2*l5**2)+(9*l1**2*l2*l3+18*l1*l2**2*l3+27*l1*l2*l3**2"
        "+36*l2**2*l3*l4+36*l2*l3**2*l4+36*l2*l3*l4**2+27*l3**2*l4*l5"
        "+18*l3*l4**2*l5+9*l3*l4*l5**2+12*l1**2*l2*l4+24*l1*l2**2*l4"
        "+18*l1**2*l3*l4)+(1/2)*(63*l1*l3**2*l4+56*l1*l2*l4**2"
        "+54*l1*l3*l4**2+54*l2**2*l3*l5+63*l2*l3**2*l5+56*l2**2*l4*l5"
        "+48*l2*l4**2*l5+36*l2*l3*l5**2+24*l2*l4*l5**2)"
        "+(1/4)*(30*l1**2*l2*l5+60*l1*l2**2*l5+40*l1**2*l4*l5"
        "+60*l1*l4**2*l5+40*l1*l2*l5**2+30*l1*l4*l5**2+45*l1**2*l3*l5"
        "+90*l1*l3**2*l5+45*l1*l3*l5**2)+(72*l1*l2*l3*l4+72*l2*l3*l4*l5"
        "+45*l1*l2*l3*l5+45*l1*l3*l4*l5+40*l1*l2*l4*l5))+((1/120)*(l1**5"
        "+26*l2**5+66*l3**5+26*l4**5+l5**5)+(1/24)*(2*l1**4*l2+16*l1*l2**4"
        "+36*l2**4*l3+66*l2*l3**4+66*l3**4*l4+36*l3*l4**4+16*l4**4*l5"
        "+2*l4*l5**4+3*l1**4*l3+66*l1*l3**4+46*l2**4*l4+46*l2*l4**4"
        "+66*l3**4*l5+3*l3*l5**4+4*l1**4*l4+56*l1*l4**4+56*l2**4*l5"
        "+4*l2*l5**4+5*l1**4*l5+5*l1*l5**4+8*l1**3*l2**2+16*l1**2*l2**3"
        "+96*l2**3*l3**2+120*l2**2*l3**3+120*l3**3*l4**2+96*l3**2*l4**3"
        "+16*l4**3*l5**2+8*l4**2*l5**3+18*l1**3*l3**2+54*l1**2*l3**3"
        "+148*l2**3*l4**2+148*l2**2*l4**3+54*l3**3*l5**2+18*l3**2*l5**3"
        "+32*l1**3*l4**2+88*l1**2*l4**3+88*l2**3*l5**2+32*l2**2*l5**3"
        "+20*l1**3*l5**2+20*l1**2*l5**3)+(1/12)*(12*l1**3*l2*l3"
        "+48*l1*l2**3*l3+108*l1*l2*l3**3+120*l2**3*l3*l4+144*l2*l3**3*l4"
        "+120*l2*l3*l4**3+108*l3**3*l4*l5+48*l3*l4**3*l5+12*l3*l4*l5**3"
        "+16*l1**3*l2*l4+64*l1*l2**3*l4+24*l1**3*l3*l4+156*l1*l3**3*l4"
        "+144*l1*l3*l4**3+176*l1*l2*l4**3+144*l2**3*l3*l5+156*l2*l3**3*l5"
        "+176*l2**3*l4*l5+64*l2*l4**3*l5+24*l2*l3*l5**3+16*l2*l4*l5**3"
        "+20*l1**3*l2*l5+80*l1*l2**3*l5+40*l1**3*l4*l5+80*l1*l4**3*l5"
        "+40*l1*l2*l5**3+20*l1*l4*l5**3+30*l1**3*l3*l5+180*l1*l3**3*l5"
        "+30*l1*l3*l5**3+36*l1**2*l2**2*l3+54*l1**2*l2*l3**2"
        "+108*l1*l2**2*l3**2+216*l2**2*l3**2*l4+252*l2**2*l3*l4**2"
        "+216*l2*l3**2*l4**2+108*l3**2*l4**2*l5+54*l3**2*l4*l5**2"
        "+36*l3*l4**2*l5**2+48*l1**2*l2**2*l4+108*l1**2*l3**2*l4"
        "+96*l1**2*l2*l4**2+192*l1*l2**2*l4**2+144*l1**2*l3*l4**2"
        "+252*l1*l3**2*l4**2+192*l2**2*l4**2*l5+252*l2**2*l3**2*l5"
        "+144*l2**2*l3*l5**2+108*l2*l3**2*l5**2+96*l2**2*l4*l5**2"
        "+48*l2*l4**2*l5**2+60*l1**2*l2**2*l5+120*l1**2*l4**2*l5"
        "+60*l1**2*l2*l5**2+120*l1*l2**2*l5**2+60*l1**2*l4*l5**2"
        "+60*l1*l4**2*l5**2+135*l1**2*l3**2*l5+90*l1**2*l3*l5**2"
        "+135*l1*l3**2*l5**2)+(12*l1**2*l2*l3*l4+24*l1*l2**2*l3*l4"
        "+36*l1*l2*l3**2*l4+48*l1*l2*l3*l4**2+48*l2**2*l3*l4*l5"
        "+36*l2*l3**2*l4*l5+24*l2*l3*l4**2*l5+12*l2*l3*l4*l5**2"
        "+15*l1**2*l2*l3*l5+30*l1*l2**2*l3*l5+45*l1*l2*l3**2*l5"
        "+20*l1**2*l2*l4*l5+40*l1*l2**2*l4*l5+30*l1**2*l3*l4*l5"
        "+45*l1*l3**2*l4*l5+40*l1*l2*l4**2*l5+30*l1*l3*l4**2*l5"
        "+30*l1*l2*l3*l5**2+20*l1*l2*l4*l5**2+15*l1*l3*l4*l5**2"
        "+120*l1*l2*l3*l4*l5))"
    ),
}

FIXTURE_ALGEBRAS: Tuple[str, ...] = tuple(LAYER_POLYNOMIALS)


def rho_prime_fixture(name: str) -> Tuple[Fraction, ...]:
    """Printed rho' over the simple roots."""
    return tuple(Fraction(c, 2) for c in RHO_PRIME_DOUBLED[name.upper()])


def layer_polynomial_fixture(name: str) -> MultiPoly:
    """Parse the printed layer polynomial of ``name`` into a MultiPoly."""
    key = name.upper()
    rank = len(RHO_PRIME_DOUBLED[key])
    symbols = sympy.symbols(f"l1:{rank + 1}")
    local = {str(s): s for s in symbols}
    expr = sympy.sympify(LAYER_POLYNOMIALS[key], locals=local)
    return from_sympy(expr, symbols)


def check_fixture(name: str) -> Dict[str, object]:
    """Compare computed rho' and R for ``name`` with the printed values."""
    rs = root_system(name)
    witness: Dict[str, object] = {}
    computed_rho = rho_prime_root_basis(rs)
    if computed_rho != rho_prime_fixture(name):
        witness["rho_prime"] = [str(x) for x in computed_rho]
    computed = layer_polynomial(rs)
    printed = layer_polynomial_fixture(name)
    if computed != printed:
        witness["difference"] = str(computed - printed)
    entry: Dict[str, object] = {"name": f"fixtures:{rs.name}", "status": "fail" if witness else "pass"}
    if witness:
        entry["witness"] = witness
    return entry
