#pragma once

// High-precision reference values (40-digit arithmetic, rounded to 22
// significant digits) for lgamma, digamma and trigamma.

struct SpecialRef {
    double x;
    double lgamma;
    double digamma;
    double trigamma;
};

inline constexpr SpecialRef kSpecialRefs[] = {
    {0.001, 6.907178885383853682512, -1000.575571931810300471, 1000001.642533195868978},
    {0.0073, 4.915710930632826307442, -137.551572655570540148, 18766.87431846280176383},
    {0.05, 2.968879201051730825355, -20.49784499129987037106, 401.5323573421151193085},
    {0.1, 2.25271265173420595987, -10.42375494041107679517, 101.4332991507927588172},
    {0.25, 1.288022524698077457371, -4.22745353337626540809, 17.19732915450711073927},
    {0.5, 0.5723649429247000870717, -1.963510026021423479441, 4.934802200544679309417},
    {0.75, 0.2032809514312953714814, -1.085860879786472169627, 2.541879647671606498398},
    {0.9, 0.06637623973474297118872, -0.7549269499470513918864, 1.922539959477203516479},
    {1.0, 0.0, -0.5772156649015328606065, 1.644934066848226436472},
    {1.25, -0.09827183642181316146385, -0.2274535333762654080895, 1.197329154507110739271},
    {1.5, -0.1207822376352452223455, 0.03648997397857652055902, 0.9348022005446793094172},
    {1.69, -0.09785341346052811557956, 0.2005851930567470170416, 0.7993185197828707062071},
    {2.0, 0.0, 0.4227843350984671393935, 0.6449340668482264364724},
    {2.5, 0.2846828704729191596325, 0.7031566406452431872257, 0.4903577561002348649728},
    {3.0, 0.6931471805599453094172, 0.9227843350984671393935, 0.3949340668482264364724},
    {3.3, 0.9870985778947345878787, 1.034822489059621749051, 0.3535015418410618102634},
    {4.2, 2.048555636960589809021, 1.311338891286599583241, 0.2686649407314007945605},
    {5.0, 3.178053830347945619647, 1.506117668431800472727, 0.2213229557371153253613},
    {6.75, 6.115915891431545415849, 1.833643414546197449084, 0.1596616652473813121222},
    {7.99, 8.505011606088480676353, 2.014309222046223771092, 0.1333142456598576001306},
    {8.0, 8.525161361065414300166, 2.015641477955609996536, 0.1331370146940314251345},
    {8.5, 9.549267257300997711737, 2.080090817579420121403, 0.1248381189189260219923},
    {10.0, 12.80182748008146961121, 2.251752589066721107647, 0.1051663356816857461222},
    {12.5, 18.73434751193644570163, 2.48519565127491204815, 0.08328522460157837044359},
    {17.3, 31.51562417817528985944, 2.821526423539867020483, 0.05950625643629067832784},
    {25.0, 54.78472939811231919009, 3.198742512851974008528, 0.04081066325722557918736},
    {50.0, 144.5657439463448860089, 3.901989673427892196954, 0.02020133322669712580597},
    {100.0, 359.134205369575398776, 4.600161852738087400199, 0.01005016666333357139525},
    {321.5, 1532.551409255313352532, 5.771441527499110713517, 0.003115262278078454248104},
    {1000.0, 5905.220423209181211826, 6.90725519564881205205, 0.001000500166666633333357},
    {12345.6, 103959.1850661684555825, 9.421014502465396594146, 0.00008100379903388378486182},
};
