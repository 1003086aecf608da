//! Reference values computed independently of this crate.
//!
//! LOESS_XSQ_REF: statsmodels `lowess(y, x, frac=0.75, it=0)` on
//! y = x^2, x = linspace(0, 1, 101).
//! NRD0_XS / NRD0_EXPECTED: numpy `default_rng(42).standard_normal(100)`
//! and 0.9 * min(sd, IQR/1.34) * n^(-1/5) with type-7 quantiles.

pub const LOESS_XSQ_REF: [f64; 101] = [
    -0.04588377651086973,
    -0.04088011548914414,
    -0.03584913825416744,
    -0.03079017830922209,
    -0.02570277432717411,
    -0.020586648295389254,
    -0.015441685522992427,
    -0.010267916270686968,
    -0.0050654987997019695,
    0.0001652963316495355,
    0.00542410086665241,
    0.010710462460450838,
    0.01602385739273759,
    0.021363702448074156,
    0.026729366001932618,
    0.03212017832052706,
    0.03753544104808565,
    0.04297443581512812,
    0.048436431855238035,
    0.053920692467921555,
    0.059426480119398446,
    0.06495305995203343,
    0.07049970152286003,
    0.0760656788106438,
    0.08165026912109381,
    0.08725275288659444,
    0.09287241930183893,
    0.09850858882352351,
    0.10416067578872479,
    0.1098283383651365,
    0.11551180863395608,
    0.12121257842503545,
    0.1269347540918214,
    0.132687577102452,
    0.1384896889552576,
    0.14437505958367708,
    0.15039717703423708,
    0.15661813166395,
    0.1641181316639501,
    0.17181813166395,
    0.17971813166395015,
    0.18781813166395,
    0.19611813166395006,
    0.20461813166395001,
    0.21331813166394992,
    0.22221813166395,
    0.23131813166395007,
    0.24061813166394996,
    0.25011813166395014,
    0.25981813166395,
    0.26971813166395014,
    0.2798181316639503,
    0.2901181316639502,
    0.30061813166395007,
    0.31131813166395,
    0.3222181316639503,
    0.33331813166395025,
    0.3446181316639501,
    0.35611813166394996,
    0.36781813166395,
    0.3797181316639503,
    0.39181813166395024,
    0.40411813166394994,
    0.4166181316639498,
    0.4303971770342372,
    0.4443750595836771,
    0.4584896889552577,
    0.4726875771024519,
    0.48693475409182135,
    0.5012125784250356,
    0.5155118086339561,
    0.5298283383651369,
    0.544160675788725,
    0.5585085888235234,
    0.5728724193018387,
    0.5872527528865943,
    0.6016502691210942,
    0.6160656788106436,
    0.6304997015228598,
    0.6449530599520333,
    0.6594264801193981,
    0.6739206924679221,
    0.6884364318552384,
    0.7029744358151285,
    0.7175354410480864,
    0.7321201783205273,
    0.7467293660019325,
    0.7613637024480757,
    0.7760238573927376,
    0.7907104624604502,
    0.8054241008666524,
    0.82016529633165,
    0.8349345012002989,
    0.8497320837293146,
    0.8645583144770081,
    0.8794133517046111,
    0.8942972256728262,
    0.9092098216907777,
    0.9241508617458316,
    0.9391198845108553,
    0.9541162234891294
];
pub const NRD0_XS: [f64; 100] = [
    0.30471707975443135,
    -1.0399841062404955,
    0.7504511958064572,
    0.9405647163912139,
    -1.9510351886538364,
    -1.302179506862318,
    0.12784040316728537,
    -0.3162425923435822,
    -0.016801157504288795,
    -0.85304392757358,
    0.8793979748628286,
    0.7777919354289483,
    0.06603069756121605,
    1.1272412069680329,
    0.4675093422520456,
    -0.8592924628832382,
    0.36875078408249884,
    -0.9588826008289989,
    0.8784503013072725,
    -0.049925910986252896,
    -0.18486236354526056,
    -0.6809295444039414,
    1.2225413386740303,
    -0.15452948206880215,
    -0.4283278221631072,
    -0.3521335504882296,
    0.5323091855533487,
    0.36544406436407834,
    0.4127326115959884,
    0.43082100300788273,
    2.1416476008704612,
    -0.4064150163846156,
    -0.5122427290715373,
    -0.8137727282478777,
    0.6159794225754956,
    1.1289722927208916,
    -0.11394745765487507,
    -0.840156476962528,
    -0.8244812156912396,
    0.6505927878247011,
    0.7432541712034423,
    0.543154268305195,
    -0.6655097072886943,
    0.23216132306671977,
    0.11668580914072822,
    0.21868859672901295,
    0.8714287779481898,
    0.22359554877468227,
    0.6789135630718949,
    0.06757906948889146,
    0.28911939868998415,
    0.6312882258385404,
    -1.4571558198556664,
    -0.31967121635730134,
    -0.4703726542927955,
    -0.6388778482433419,
    -0.27514225122668373,
    1.4949413112343959,
    -0.8658311156932432,
    0.9682783545914808,
    -1.6828697716158048,
    -0.33488502998577485,
    0.1627530651050056,
    0.5862223313592781,
    0.711226579792855,
    0.7933472351999252,
    -0.3487250722484376,
    -0.46235179266456716,
    0.8579758812571538,
    -0.1913043248816149,
    -1.2756863233379219,
    -1.1332872140034806,
    -0.9194522860016113,
    0.49716074405376404,
    0.14242573607056525,
    0.6904853540677682,
    -0.42725264633653426,
    0.15853969107671423,
    0.6255903939673367,
    -0.3093465397202384,
    0.45677523755741145,
    -0.6619259410666513,
    -0.3630538465650718,
    -0.3817378939983291,
    -1.1958396455890397,
    0.4869724807855818,
    -0.46940234020272387,
    0.01249411872768743,
    0.48074665890590895,
    0.4465311760299441,
    0.6653851089727862,
    -0.09848548450942361,
    -0.42329831204415375,
    -0.07971821090639905,
    -1.6873344339580298,
    -1.4471124724230873,
    -1.3226996123544024,
    -0.9972468276014818,
    0.3997742267234366,
    -0.9054790553600608
];
pub const NRD0_EXPECTED: f64 = 0.2782806928694401;
