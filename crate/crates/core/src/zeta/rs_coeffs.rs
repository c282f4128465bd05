//! Taylor coefficients, in powers of `p - 1/2`, of the Riemann–Siegel
//! correction functions `C_0 … C_4` built from
//! `Ψ(p) = cos(2π(p² - p - 1/16)) / cos(2πp)`.
//!
//! Generated offline from a 60-digit Cauchy-integral expansion of `Ψ`;
//! series truncated once terms fall below 1e-19 on `|p - 1/2| ≤ 1/2`.

pub(crate) const C0: [f64; 43] = [
    0.3826834323650898,
    0.0,
    1.7489618723100817,
    0.0,
    2.118025207685496,
    0.0,
    -0.8707216670511481,
    0.0,
    -3.4733112243465167,
    0.0,
    -1.6626947308999325,
    0.0,
    1.216731288919232,
    0.0,
    1.3014304161007977,
    0.0,
    0.03051102182736167,
    0.0,
    -0.3755803051545095,
    0.0,
    -0.1085784416564066,
    0.0,
    0.051832902999549624,
    0.0,
    0.029999480619902277,
    0.0,
    -0.0022759396706125644,
    0.0,
    -0.004382647416580339,
    0.0,
    -0.0004064230183729847,
    0.0,
    0.0004006097785422114,
    0.0,
    8.971057991388841e-05,
    0.0,
    -2.3025650027239108e-05,
    0.0,
    -9.380006601906792e-06,
    0.0,
    6.323514947609108e-07,
    0.0,
    6.551022819231502e-07,
];

pub(crate) const C1: [f64; 44] = [
    0.0,
    -0.053650205256750697,
    0.0,
    0.11027818741081483,
    0.0,
    1.2317200154315227,
    0.0,
    1.2634964862799458,
    0.0,
    -1.695108997559503,
    0.0,
    -2.9998711967650102,
    0.0,
    -0.10819944959899208,
    0.0,
    1.9407662946212714,
    0.0,
    0.7838423561500687,
    0.0,
    -0.5054829667900366,
    0.0,
    -0.38450723496057976,
    0.0,
    0.03747264646531532,
    0.0,
    0.09092026610973176,
    0.0,
    0.01044923755006451,
    0.0,
    -0.012582979651583417,
    0.0,
    -0.003399503721151274,
    0.0,
    0.0010410950537714891,
    0.0,
    0.0005010949051118486,
    0.0,
    -3.956359669003182e-05,
    0.0,
    -4.7624592453571896e-05,
    0.0,
    -1.8539355338085133e-06,
    0.0,
    3.1936918080068973e-06,
];

pub(crate) const C2: [f64; 45] = [
    0.005188542830293168,
    0.0,
    0.0012378633552253898,
    0.0,
    -0.18137505725166997,
    0.0,
    0.14291492748532125,
    0.0,
    1.3303391766687565,
    0.0,
    0.3522472353403734,
    0.0,
    -2.421001595891951,
    0.0,
    -1.6760787022538108,
    0.0,
    1.3689416723328371,
    0.0,
    1.5539019430222982,
    0.0,
    -0.1722164273472998,
    0.0,
    -0.6359068055045431,
    0.0,
    -0.09911649873041208,
    0.0,
    0.14033480067387008,
    0.0,
    0.04782352019827292,
    0.0,
    -0.017356040641479782,
    0.0,
    -0.010225012534028593,
    0.0,
    0.0009274149159794888,
    0.0,
    0.0013572194372373386,
    0.0,
    6.41369012029388e-05,
    0.0,
    -0.0001230080569819663,
    0.0,
    -1.83135074047892e-05,
    0.0,
    7.821628604322627e-06,
];

pub(crate) const C3: [f64; 46] = [
    0.0,
    -0.0026794321814389136,
    0.0,
    0.02995372109103515,
    0.0,
    -0.042570172541828696,
    0.0,
    -0.28997965779803886,
    0.0,
    0.4888831999235446,
    0.0,
    1.230855876395746,
    0.0,
    -0.8297560708527408,
    0.0,
    -2.249763536666567,
    0.0,
    0.07845139961005472,
    0.0,
    1.7467492800868893,
    0.0,
    0.45968080979749937,
    0.0,
    -0.6619353471039775,
    0.0,
    -0.31590441036173633,
    0.0,
    0.12844792545207495,
    0.0,
    0.10073382716626152,
    0.0,
    -0.009530183848825268,
    0.0,
    -0.019264421687514088,
    0.0,
    -0.001246463715876929,
    0.0,
    0.0024243969641103086,
    0.0,
    0.000437647697741857,
    0.0,
    -0.00020714032687001792,
    0.0,
    -6.274344504186516e-05,
    0.0,
    1.157534381459567e-05,
];

pub(crate) const C4: [f64; 47] = [
    0.00046483389361763383,
    0.0,
    -0.004022642946136188,
    0.0,
    0.003847177051796127,
    0.0,
    0.06581175135809486,
    0.0,
    -0.19604124343694448,
    0.0,
    -0.20854053686358853,
    0.0,
    0.9507754185141751,
    0.0,
    0.5341535312914873,
    0.0,
    -1.67634944117634,
    0.0,
    -1.076747157875129,
    0.0,
    1.235339301656597,
    0.0,
    1.0257825340057276,
    0.0,
    -0.40124095793988546,
    0.0,
    -0.5036663995108304,
    0.0,
    0.03573487795502745,
    0.0,
    0.14431763086785418,
    0.0,
    0.01509152741790347,
    0.0,
    -0.026098874779194363,
    0.0,
    -0.006126628379519262,
    0.0,
    0.003077503129870841,
    0.0,
    0.0011562478934088753,
    0.0,
    -0.00022775966758472127,
    0.0,
    -0.00014189637118181445,
    0.0,
    7.4648603079559195e-06,
];
