#pragma once

// Reference values computed with mpmath at 50 significant digits by
// tests/tools/make_reference_values.py.  Do not edit by hand.

#include <complex>

namespace refvals {

using cplx = std::complex<double>;

struct ERef { double ap, am; cplx z, e; };
struct GRef { double ap, am; cplx z, g; };
struct LgRef { cplx z, lg; };

inline const ERef kE[] = {
    {1.0000000000000000, 1.0000000000000000, cplx{0.50000000000000000, 0.0}, cplx{0.18065887047651836, -0.31272863678263593}},
    {1.0000000000000000, 1.0000000000000000, cplx{2.0000000000000000, 0.30000000000000000}, cplx{2.3643844534945555, -3.0282040024625013}},
    {1.0000000000000000, 1.0000000000000000, cplx{-3.7000000000000000, 0.90000000000000000}, cplx{6.7979761570788994, 11.260949770749987}},
    {1.0000000000000000, 1.0000000000000000, cplx{8.0000000000000000, -0.50000000000000000}, cplx{-24.904149590531590, -45.879659891635722}},
    {1.0000000000000000, 1.0000000000000000, cplx{0.0, 0.10000000000000000}, cplx{0.041533205513042327, 0.0}},
    {1.0000000000000000, 1.0000000000000000, cplx{-9.9000000000000000, 0.45000000000000000}, cplx{-31.964640922187375, 82.709228270259485}},
    {2.0000000000000000, 0.50000000000000000, cplx{0.50000000000000000, 0.0}, cplx{0.14457251086092383, -0.40565316628325517}},
    {2.0000000000000000, 0.50000000000000000, cplx{1.2000000000000000, -0.40000000000000000}, cplx{-0.10326034411400426, -1.6158026174637993}},
    {2.0000000000000000, 0.50000000000000000, cplx{-6.0000000000000000, 1.0000000000000000}, cplx{4.4715793009842743, 32.519391202068205}},
    {2.0000000000000000, 0.50000000000000000, cplx{10.000000000000000, 0.20000000000000000}, cplx{-37.628574686956470, -81.395148923197635}},
    {1.0000000000000000, 1.4142135623730950, cplx{0.50000000000000000, 0.0}, cplx{0.12894412614879904, -0.25346474548159665}},
    {1.0000000000000000, 1.4142135623730950, cplx{3.0000000000000000, 0.60000000000000000}, cplx{3.6907772106325477, -4.8514072502614764}},
    {1.0000000000000000, 1.4142135623730950, cplx{-9.5000000000000000, -0.80000000000000000}, cplx{-26.770635770800873, 44.110380103002310}},
};

inline const GRef kG[] = {
    {1.0000000000000000, 1.0000000000000000, cplx{0.50000000000000000, 0.0}, cplx{0.81069548521268043, -0.58546804375283938}},
    {1.0000000000000000, 1.0000000000000000, cplx{0.30000000000000000, 0.40000000000000000}, cplx{1.5626341109949111, -0.27640141607797323}},
    {1.0000000000000000, 1.0000000000000000, cplx{0.30000000000000000, 1.4000000000000000}, cplx{-4.2071442574249256, 1.8281240725613183}},
    {2.0000000000000000, 0.50000000000000000, cplx{0.77000000000000000, -0.30000000000000000}, cplx{0.11934928694250395, -0.44507026464364990}},
    {1.0000000000000000, 1.4142135623730950, cplx{-1.1000000000000000, 0.25000000000000000}, cplx{0.038197307685045730, 1.8485929342321784}},
};

inline const LgRef kLogGamma[] = {
    {cplx{3.0000000000000000, 4.0000000000000000}, cplx{-1.7566267846037841, 4.7426644380346579}},
    {cplx{0.50000000000000000, 0.0}, cplx{0.57236494292470009, 0.0}},
    {cplx{-5.5000000000000000, 2.0000000000000000}, cplx{-9.7811429856215211, -15.228097632212938}},
    {cplx{-20.300000000000000, -13.700000000000000}, cplx{-80.214744437177489, 22.882341285051650}},
    {cplx{40.000000000000000, 70.000000000000000}, cplx{60.700196234335252, 278.82379691562322}},
    {cplx{-0.75000000000000000, 0.0}, cplx{1.5757045971498584, -3.1415926535897932}},
    {cplx{95.000000000000000, -3.0000000000000000}, cplx{336.21357137074922, -13.646317239488304}},
};

// c(a=(1,1), b=0.7; z=0.3)
inline const cplx kCSample = cplx{0.054877759600839242, -0.65809691386155703};
// u(a=(1,1), b=0.8; z=0.45+0.1i)
inline const cplx kUSample = cplx{0.98322441269825749, 0.095954410544278583};
// W2(a=(1,1), b=0.8; z=(0.4,-0.3)) -- depends only on z1-z2 = 0.7
inline const cplx kW2Sample = cplx{32.303015484341248, 0.0};
// mu(a=(1,1), b=0.8; p=(0.55,-0.2))
inline const cplx kMuSample = cplx{0.073698930616375290, -6.9842401695286110e-54};
// E2as(a=(1,1), b=0.8; x=(0.4,-0.2), y=(0.9,0.1))
inline const cplx kE2AsSample = cplx{-1.0851087074427620, 1.6799650361189074};
// integral of exp(2 pi i t) exp(-|t|) over the real line (= 2/(1+4 pi^2))
inline const cplx kOscAbsIntegral = cplx{0.049409046063715280, 0.0};

}  // namespace refvals
