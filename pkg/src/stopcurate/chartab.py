"""Character classification and case-fold tables for word scanning.

Generated by tools/gen_chartab.py; do not edit by hand.
Unicode data version: 13.0.0
"""

OTHER, LETTER, MARK, DIGIT, CONNECTOR, APOS, SPACE = range(7)

UNIDATA_VERSION = '13.0.0'

_STARTS = (
    0,9,14,28,33,39,40,48,58,65,91,95,96,97,123,133,
    134,160,161,170,171,181,182,186,187,192,215,216,247,248,706,710,
    722,736,741,748,749,750,751,768,880,885,886,888,890,894,895,896,
    902,903,904,907,908,909,910,930,931,1014,1015,1154,1155,1162,1328,1329,
    1367,1369,1370,1376,1417,1425,1470,1471,1472,1473,1475,1476,1478,1479,1480,1488,
    1515,1519,1523,1552,1563,1568,1611,1632,1642,1646,1648,1649,1748,1749,1750,1757,
    1759,1765,1767,1769,1770,1774,1776,1786,1789,1791,1792,1808,1809,1810,1840,1867,
    1869,1958,1969,1970,1984,1994,2027,2036,2038,2042,2043,2045,2046,2048,2070,2074,
    2075,2084,2085,2088,2089,2094,2112,2137,2140,2144,2155,2208,2229,2230,2248,2259,
    2274,2275,2308,2362,2365,2366,2384,2385,2392,2402,2404,2406,2416,2417,2433,2436,
    2437,2445,2447,2449,2451,2473,2474,2481,2482,2483,2486,2490,2492,2493,2494,2501,
    2503,2505,2507,2510,2511,2519,2520,2524,2526,2527,2530,2532,2534,2544,2546,2556,
    2557,2558,2559,2561,2564,2565,2571,2575,2577,2579,2601,2602,2609,2610,2612,2613,
    2615,2616,2618,2620,2621,2622,2627,2631,2633,2635,2638,2641,2642,2649,2653,2654,
    2655,2662,2672,2674,2677,2678,2689,2692,2693,2702,2703,2706,2707,2729,2730,2737,
    2738,2740,2741,2746,2748,2749,2750,2758,2759,2762,2763,2766,2768,2769,2784,2786,
    2788,2790,2800,2809,2810,2816,2817,2820,2821,2829,2831,2833,2835,2857,2858,2865,
    2866,2868,2869,2874,2876,2877,2878,2885,2887,2889,2891,2894,2901,2904,2908,2910,
    2911,2914,2916,2918,2928,2929,2930,2946,2947,2948,2949,2955,2958,2961,2962,2966,
    2969,2971,2972,2973,2974,2976,2979,2981,2984,2987,2990,3002,3006,3011,3014,3017,
    3018,3022,3024,3025,3031,3032,3046,3056,3072,3077,3085,3086,3089,3090,3113,3114,
    3130,3133,3134,3141,3142,3145,3146,3150,3157,3159,3160,3163,3168,3170,3172,3174,
    3184,3200,3201,3204,3205,3213,3214,3217,3218,3241,3242,3252,3253,3258,3260,3261,
    3262,3269,3270,3273,3274,3278,3285,3287,3294,3295,3296,3298,3300,3302,3312,3313,
    3315,3328,3332,3341,3342,3345,3346,3387,3389,3390,3397,3398,3401,3402,3406,3407,
    3412,3415,3416,3423,3426,3428,3430,3440,3450,3456,3457,3460,3461,3479,3482,3506,
    3507,3516,3517,3518,3520,3527,3530,3531,3535,3541,3542,3543,3544,3552,3558,3568,
    3570,3572,3585,3633,3634,3636,3643,3648,3655,3663,3664,3674,3713,3715,3716,3717,
    3718,3723,3724,3748,3749,3750,3751,3761,3762,3764,3773,3774,3776,3781,3782,3783,
    3784,3790,3792,3802,3804,3808,3840,3841,3864,3866,3872,3882,3893,3894,3895,3896,
    3897,3898,3902,3904,3912,3913,3949,3953,3973,3974,3976,3981,3992,3993,4029,4038,
    4039,4096,4139,4159,4160,4170,4176,4182,4186,4190,4193,4194,4197,4199,4206,4209,
    4213,4226,4238,4239,4240,4250,4254,4256,4294,4295,4296,4301,4302,4304,4347,4348,
    4681,4682,4686,4688,4695,4696,4697,4698,4702,4704,4745,4746,4750,4752,4785,4786,
    4790,4792,4799,4800,4801,4802,4806,4808,4823,4824,4881,4882,4886,4888,4955,4957,
    4960,4992,5008,5024,5110,5112,5118,5121,5741,5743,5760,5761,5787,5792,5867,5873,
    5881,5888,5901,5902,5906,5909,5920,5938,5941,5952,5970,5972,5984,5997,5998,6001,
    6002,6004,6016,6068,6100,6103,6104,6108,6109,6110,6112,6122,6155,6158,6160,6170,
    6176,6265,6272,6277,6279,6313,6314,6315,6320,6390,6400,6431,6432,6444,6448,6460,
    6470,6480,6510,6512,6517,6528,6572,6576,6602,6608,6618,6656,6679,6684,6688,6741,
    6751,6752,6781,6783,6784,6794,6800,6810,6823,6824,6832,6849,6912,6917,6964,6981,
    6988,6992,7002,7019,7028,7040,7043,7073,7086,7088,7098,7142,7156,7168,7204,7224,
    7232,7242,7245,7248,7258,7294,7296,7305,7312,7355,7357,7360,7376,7379,7380,7401,
    7405,7406,7412,7413,7415,7418,7419,7424,7616,7674,7675,7680,7958,7960,7966,7968,
    8006,8008,8014,8016,8024,8025,8026,8027,8028,8029,8030,8031,8062,8064,8117,8118,
    8125,8126,8127,8130,8133,8134,8141,8144,8148,8150,8156,8160,8173,8178,8181,8182,
    8189,8192,8203,8217,8218,8232,8234,8239,8240,8255,8257,8276,8277,8287,8288,8305,
    8306,8319,8320,8336,8349,8400,8433,8450,8451,8455,8456,8458,8468,8469,8470,8473,
    8478,8484,8485,8486,8487,8488,8489,8490,8494,8495,8506,8508,8512,8517,8522,8526,
    8527,8579,8581,11264,11311,11312,11359,11360,11493,11499,11503,11506,11508,11520,11558,11559,
    11560,11565,11566,11568,11624,11631,11632,11647,11648,11671,11680,11687,11688,11695,11696,11703,
    11704,11711,11712,11719,11720,11727,11728,11735,11736,11743,11744,11776,11823,11824,12288,12289,
    12293,12295,12330,12336,12337,12342,12347,12349,12353,12439,12441,12443,12445,12448,12449,12539,
    12540,12544,12549,12592,12593,12687,12704,12736,12784,12800,13312,19904,19968,40957,40960,42125,
    42192,42238,42240,42509,42512,42528,42538,42540,42560,42607,42611,42612,42622,42623,42654,42656,
    42726,42736,42738,42775,42784,42786,42889,42891,42944,42946,42955,42997,43010,43011,43014,43015,
    43019,43020,43043,43048,43052,43053,43072,43124,43136,43138,43188,43206,43216,43226,43232,43250,
    43256,43259,43260,43261,43263,43264,43274,43302,43310,43312,43335,43348,43360,43389,43392,43396,
    43443,43457,43471,43472,43482,43488,43493,43494,43504,43514,43519,43520,43561,43575,43584,43587,
    43588,43596,43598,43600,43610,43616,43639,43642,43643,43646,43696,43697,43698,43701,43703,43705,
    43710,43712,43713,43714,43715,43739,43742,43744,43755,43760,43762,43765,43767,43777,43783,43785,
    43791,43793,43799,43808,43815,43816,43823,43824,43867,43868,43882,43888,44003,44011,44012,44014,
    44016,44026,44032,55204,55216,55239,55243,55292,63744,64110,64112,64218,64256,64263,64275,64280,
    64285,64286,64287,64297,64298,64311,64312,64317,64318,64319,64320,64322,64323,64325,64326,64434,
    64467,64830,64848,64912,64914,64968,65008,65020,65024,65040,65056,65072,65075,65077,65101,65104,
    65136,65141,65142,65277,65296,65306,65313,65339,65343,65344,65345,65371,65382,65471,65474,65480,
    65482,65488,65490,65496,65498,65501,65536,65548,65549,65575,65576,65595,65596,65598,65599,65614,
    65616,65630,65664,65787,66045,66046,66176,66205,66208,66257,66272,66273,66304,66336,66349,66369,
    66370,66378,66384,66422,66427,66432,66462,66464,66500,66504,66512,66560,66718,66720,66730,66736,
    66772,66776,66812,66816,66856,66864,66916,67072,67383,67392,67414,67424,67432,67584,67590,67592,
    67593,67594,67638,67639,67641,67644,67645,67647,67670,67680,67703,67712,67743,67808,67827,67828,
    67830,67840,67862,67872,67898,67968,68024,68030,68032,68096,68097,68100,68101,68103,68108,68112,
    68116,68117,68120,68121,68150,68152,68155,68159,68160,68192,68221,68224,68253,68288,68296,68297,
    68325,68327,68352,68406,68416,68438,68448,68467,68480,68498,68608,68681,68736,68787,68800,68851,
    68864,68900,68904,68912,68922,69248,69290,69291,69293,69296,69298,69376,69405,69415,69416,69424,
    69446,69457,69552,69573,69600,69623,69632,69635,69688,69703,69734,69744,69759,69763,69808,69819,
    69840,69865,69872,69882,69888,69891,69927,69941,69942,69952,69956,69957,69959,69960,69968,70003,
    70004,70006,70007,70016,70019,70067,70081,70085,70089,70093,70094,70096,70106,70107,70108,70109,
    70144,70162,70163,70188,70200,70206,70207,70272,70279,70280,70281,70282,70286,70287,70302,70303,
    70313,70320,70367,70379,70384,70394,70400,70404,70405,70413,70415,70417,70419,70441,70442,70449,
    70450,70452,70453,70458,70459,70461,70462,70469,70471,70473,70475,70478,70480,70481,70487,70488,
    70493,70498,70500,70502,70509,70512,70517,70656,70709,70727,70731,70736,70746,70750,70751,70754,
    70784,70832,70852,70854,70855,70856,70864,70874,71040,71087,71094,71096,71105,71128,71132,71134,
    71168,71216,71233,71236,71237,71248,71258,71296,71339,71352,71353,71360,71370,71424,71451,71453,
    71468,71472,71482,71680,71724,71739,71840,71904,71914,71935,71943,71945,71946,71948,71956,71957,
    71959,71960,71984,71990,71991,71993,71995,71999,72000,72001,72002,72004,72016,72026,72096,72104,
    72106,72145,72152,72154,72161,72162,72163,72164,72165,72192,72193,72203,72243,72250,72251,72255,
    72263,72264,72272,72273,72284,72330,72346,72349,72350,72384,72441,72704,72713,72714,72751,72759,
    72760,72768,72769,72784,72794,72818,72848,72850,72872,72873,72887,72960,72967,72968,72970,72971,
    73009,73015,73018,73019,73020,73022,73023,73030,73031,73032,73040,73050,73056,73062,73063,73065,
    73066,73098,73103,73104,73106,73107,73112,73113,73120,73130,73440,73459,73463,73648,73649,73728,
    74650,74880,75076,77824,78895,82944,83527,92160,92729,92736,92767,92768,92778,92880,92910,92912,
    92917,92928,92976,92983,92992,92996,93008,93018,93027,93048,93053,93072,93760,93824,93952,94027,
    94031,94032,94033,94088,94095,94099,94112,94176,94178,94179,94180,94181,94192,94194,94208,100344,
    100352,101590,101632,101641,110592,110879,110928,110931,110948,110952,110960,111356,113664,113771,113776,113789,
    113792,113801,113808,113818,113821,113823,119141,119146,119149,119155,119163,119171,119173,119180,119210,119214,
    119362,119365,119808,119893,119894,119965,119966,119968,119970,119971,119973,119975,119977,119981,119982,119994,
    119995,119996,119997,120004,120005,120070,120071,120075,120077,120085,120086,120093,120094,120122,120123,120127,
    120128,120133,120134,120135,120138,120145,120146,120486,120488,120513,120514,120539,120540,120571,120572,120597,
    120598,120629,120630,120655,120656,120687,120688,120713,120714,120745,120746,120771,120772,120780,120782,120832,
    121344,121399,121403,121453,121461,121462,121476,121477,121499,121504,121505,121520,122880,122887,122888,122905,
    122907,122914,122915,122917,122918,122923,123136,123181,123184,123191,123198,123200,123210,123214,123215,123584,
    123628,123632,123642,124928,125125,125136,125143,125184,125252,125259,125260,125264,125274,126464,126468,126469,
    126496,126497,126499,126500,126501,126503,126504,126505,126515,126516,126520,126521,126522,126523,126524,126530,
    126531,126535,126536,126537,126538,126539,126540,126541,126544,126545,126547,126548,126549,126551,126552,126553,
    126554,126555,126556,126557,126558,126559,126560,126561,126563,126564,126565,126567,126571,126572,126579,126580,
    126584,126585,126589,126590,126591,126592,126602,126603,126620,126625,126628,126629,126634,126635,126652,130032,
    130042,131072,173790,173824,177973,177984,178206,178208,183970,183984,191457,194560,195102,196608,201547,917760,
    918000,
)

_CLASSES = b'\x00\x06\x00\x06\x00\x05\x00\x03\x00\x01\x00\x04\x00\x01\x00\x06\x00\x06\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x02\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x02\x01\x00\x01\x00\x01\x00\x01\x00\x02\x00\x02\x00\x02\x00\x02\x00\x02\x00\x01\x00\x01\x00\x02\x00\x01\x02\x03\x00\x01\x02\x01\x00\x01\x02\x00\x02\x01\x02\x00\x02\x01\x03\x01\x00\x01\x00\x01\x02\x01\x02\x00\x01\x02\x01\x00\x03\x01\x02\x01\x00\x01\x00\x02\x00\x01\x02\x01\x02\x01\x02\x01\x02\x00\x01\x02\x00\x01\x00\x01\x00\x01\x00\x02\x00\x02\x01\x02\x01\x02\x01\x02\x01\x02\x00\x03\x00\x01\x02\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x02\x01\x02\x00\x02\x00\x02\x01\x00\x02\x00\x01\x00\x01\x02\x00\x03\x01\x00\x01\x00\x02\x00\x02\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x02\x00\x02\x00\x02\x00\x02\x00\x02\x00\x01\x00\x01\x00\x03\x02\x01\x02\x00\x02\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x02\x01\x02\x00\x02\x00\x02\x00\x01\x00\x01\x02\x00\x03\x00\x01\x02\x00\x02\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x02\x01\x02\x00\x02\x00\x02\x00\x02\x00\x01\x00\x01\x02\x00\x03\x00\x01\x00\x02\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x02\x00\x02\x00\x02\x00\x01\x00\x02\x00\x03\x00\x02\x01\x00\x01\x00\x01\x00\x01\x00\x01\x02\x00\x02\x00\x02\x00\x02\x00\x01\x00\x01\x02\x00\x03\x00\x01\x02\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x02\x01\x02\x00\x02\x00\x02\x00\x02\x00\x01\x00\x01\x02\x00\x03\x00\x01\x00\x02\x01\x00\x01\x00\x01\x02\x01\x02\x00\x02\x00\x02\x01\x00\x01\x02\x00\x01\x02\x00\x03\x00\x01\x00\x02\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x02\x00\x02\x00\x02\x00\x02\x00\x03\x00\x02\x00\x01\x02\x01\x02\x00\x01\x02\x00\x03\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x02\x01\x02\x01\x00\x01\x00\x01\x00\x02\x00\x03\x00\x01\x00\x01\x00\x02\x00\x03\x00\x02\x00\x02\x00\x02\x00\x02\x01\x00\x01\x00\x02\x00\x02\x01\x02\x00\x02\x00\x02\x00\x01\x02\x01\x03\x00\x01\x02\x01\x02\x01\x02\x01\x02\x01\x02\x01\x02\x01\x02\x03\x02\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x02\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x06\x01\x00\x01\x00\x01\x00\x01\x00\x01\x02\x00\x01\x02\x00\x01\x02\x00\x01\x00\x01\x00\x02\x00\x01\x02\x00\x01\x00\x01\x02\x00\x03\x00\x02\x00\x03\x00\x01\x00\x01\x02\x01\x02\x01\x00\x01\x00\x01\x00\x02\x00\x02\x00\x03\x01\x00\x01\x00\x01\x00\x01\x00\x03\x00\x01\x02\x00\x01\x02\x00\x02\x00\x02\x03\x00\x03\x00\x01\x00\x02\x00\x02\x01\x02\x01\x00\x03\x00\x02\x00\x02\x01\x02\x01\x03\x01\x02\x00\x01\x02\x00\x03\x00\x01\x03\x01\x00\x01\x00\x01\x00\x01\x00\x02\x00\x02\x01\x02\x01\x02\x01\x02\x01\x00\x01\x02\x00\x02\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x06\x00\x05\x00\x06\x00\x06\x00\x04\x00\x04\x00\x06\x00\x01\x00\x01\x00\x01\x00\x02\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x02\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x02\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x02\x00\x01\x00\x06\x00\x01\x00\x02\x00\x01\x00\x01\x00\x01\x00\x02\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x03\x01\x00\x01\x02\x00\x02\x00\x01\x02\x01\x00\x02\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x02\x01\x02\x01\x02\x01\x02\x00\x02\x00\x01\x00\x02\x01\x02\x00\x03\x00\x02\x01\x00\x01\x00\x01\x02\x03\x01\x02\x00\x01\x02\x00\x01\x00\x02\x01\x02\x00\x01\x03\x00\x01\x02\x01\x03\x01\x00\x01\x02\x00\x01\x02\x01\x02\x00\x03\x00\x01\x00\x01\x02\x01\x02\x01\x02\x01\x02\x01\x02\x01\x02\x01\x00\x01\x00\x01\x02\x00\x01\x02\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x02\x00\x02\x00\x03\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x02\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x02\x00\x02\x00\x04\x00\x04\x00\x01\x00\x01\x00\x03\x00\x01\x00\x04\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x02\x00\x01\x00\x01\x00\x02\x00\x01\x00\x01\x00\x01\x00\x01\x02\x00\x01\x00\x01\x00\x01\x00\x01\x00\x03\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x02\x00\x02\x00\x02\x01\x00\x01\x00\x01\x00\x02\x00\x02\x00\x01\x00\x01\x00\x01\x00\x01\x02\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x02\x00\x03\x00\x01\x00\x02\x00\x01\x00\x01\x00\x01\x00\x01\x02\x00\x01\x00\x01\x00\x02\x01\x02\x00\x03\x00\x02\x01\x02\x00\x01\x00\x03\x00\x02\x01\x02\x00\x03\x00\x01\x02\x01\x00\x01\x02\x00\x01\x00\x02\x01\x02\x01\x00\x02\x00\x02\x03\x01\x00\x01\x00\x01\x00\x01\x02\x00\x02\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x02\x00\x03\x00\x02\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x02\x01\x02\x00\x02\x00\x02\x00\x01\x00\x02\x00\x01\x02\x00\x02\x00\x02\x00\x01\x02\x01\x00\x03\x00\x02\x01\x00\x01\x02\x01\x00\x01\x00\x03\x00\x01\x02\x00\x02\x00\x01\x02\x00\x01\x02\x00\x01\x00\x03\x00\x01\x02\x01\x00\x03\x00\x01\x00\x02\x00\x03\x00\x01\x02\x00\x01\x03\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x02\x00\x02\x00\x02\x01\x02\x01\x02\x00\x03\x00\x01\x00\x01\x02\x00\x02\x01\x00\x01\x02\x00\x01\x02\x01\x02\x01\x02\x00\x02\x00\x01\x02\x01\x02\x00\x01\x00\x01\x00\x01\x00\x01\x02\x00\x02\x01\x00\x03\x00\x01\x00\x02\x00\x02\x00\x01\x00\x01\x00\x01\x02\x00\x02\x00\x02\x00\x02\x01\x02\x00\x03\x00\x01\x00\x01\x00\x01\x02\x00\x02\x00\x02\x01\x00\x03\x00\x01\x02\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x03\x00\x01\x00\x02\x00\x01\x02\x00\x01\x00\x03\x00\x01\x00\x01\x00\x01\x00\x01\x00\x02\x01\x02\x00\x02\x01\x00\x01\x00\x01\x02\x00\x02\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x02\x00\x02\x00\x02\x00\x02\x00\x02\x00\x02\x00\x02\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x03\x00\x02\x00\x02\x00\x02\x00\x02\x00\x02\x00\x02\x00\x02\x00\x02\x00\x02\x00\x02\x00\x02\x00\x01\x00\x02\x01\x00\x03\x00\x01\x00\x01\x02\x03\x00\x01\x00\x02\x00\x01\x02\x01\x00\x03\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x03\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x01\x00\x02\x00'

# Alternating (source char, folded char) pairs; all maps are 1:1.
_FOLD_BLOB = 'AaBbCcDdEeFfGgHhIiJjKkLlMmNnOoPpQqRrSsTtUuVvWwXxYyZz\xb5\u03bc\xc0\xe0\xc1\xe1\xc2\xe2\xc3\xe3\xc4\xe4\xc5\xe5\xc6\xe6\xc7\xe7\xc8\xe8\xc9\xe9\xca\xea\xcb\xeb\xcc\xec\xcd\xed\xce\xee\xcf\xef\xd0\xf0\xd1\xf1\xd2\xf2\xd3\xf3\xd4\xf4\xd5\xf5\xd6\xf6\xd8\xf8\xd9\xf9\xda\xfa\xdb\xfb\xdc\xfc\xdd\xfd\xde\xfe\u0100\u0101\u0102\u0103\u0104\u0105\u0106\u0107\u0108\u0109\u010a\u010b\u010c\u010d\u010e\u010f\u0110\u0111\u0112\u0113\u0114\u0115\u0116\u0117\u0118\u0119\u011a\u011b\u011c\u011d\u011e\u011f\u0120\u0121\u0122\u0123\u0124\u0125\u0126\u0127\u0128\u0129\u012a\u012b\u012c\u012d\u012e\u012f\u0132\u0133\u0134\u0135\u0136\u0137\u0139\u013a\u013b\u013c\u013d\u013e\u013f\u0140\u0141\u0142\u0143\u0144\u0145\u0146\u0147\u0148\u014a\u014b\u014c\u014d\u014e\u014f\u0150\u0151\u0152\u0153\u0154\u0155\u0156\u0157\u0158\u0159\u015a\u015b\u015c\u015d\u015e\u015f\u0160\u0161\u0162\u0163\u0164\u0165\u0166\u0167\u0168\u0169\u016a\u016b\u016c\u016d\u016e\u016f\u0170\u0171\u0172\u0173\u0174\u0175\u0176\u0177\u0178\xff\u0179\u017a\u017b\u017c\u017d\u017e\u017fs\u0181\u0253\u0182\u0183\u0184\u0185\u0186\u0254\u0187\u0188\u0189\u0256\u018a\u0257\u018b\u018c\u018e\u01dd\u018f\u0259\u0190\u025b\u0191\u0192\u0193\u0260\u0194\u0263\u0196\u0269\u0197\u0268\u0198\u0199\u019c\u026f\u019d\u0272\u019f\u0275\u01a0\u01a1\u01a2\u01a3\u01a4\u01a5\u01a6\u0280\u01a7\u01a8\u01a9\u0283\u01ac\u01ad\u01ae\u0288\u01af\u01b0\u01b1\u028a\u01b2\u028b\u01b3\u01b4\u01b5\u01b6\u01b7\u0292\u01b8\u01b9\u01bc\u01bd\u01c4\u01c6\u01c5\u01c6\u01c7\u01c9\u01c8\u01c9\u01ca\u01cc\u01cb\u01cc\u01cd\u01ce\u01cf\u01d0\u01d1\u01d2\u01d3\u01d4\u01d5\u01d6\u01d7\u01d8\u01d9\u01da\u01db\u01dc\u01de\u01df\u01e0\u01e1\u01e2\u01e3\u01e4\u01e5\u01e6\u01e7\u01e8\u01e9\u01ea\u01eb\u01ec\u01ed\u01ee\u01ef\u01f1\u01f3\u01f2\u01f3\u01f4\u01f5\u01f6\u0195\u01f7\u01bf\u01f8\u01f9\u01fa\u01fb\u01fc\u01fd\u01fe\u01ff\u0200\u0201\u0202\u0203\u0204\u0205\u0206\u0207\u0208\u0209\u020a\u020b\u020c\u020d\u020e\u020f\u0210\u0211\u0212\u0213\u0214\u0215\u0216\u0217\u0218\u0219\u021a\u021b\u021c\u021d\u021e\u021f\u0220\u019e\u0222\u0223\u0224\u0225\u0226\u0227\u0228\u0229\u022a\u022b\u022c\u022d\u022e\u022f\u0230\u0231\u0232\u0233\u023a\u2c65\u023b\u023c\u023d\u019a\u023e\u2c66\u0241\u0242\u0243\u0180\u0244\u0289\u0245\u028c\u0246\u0247\u0248\u0249\u024a\u024b\u024c\u024d\u024e\u024f\u0345\u03b9\u0370\u0371\u0372\u0373\u0376\u0377\u037f\u03f3\u0386\u03ac\u0388\u03ad\u0389\u03ae\u038a\u03af\u038c\u03cc\u038e\u03cd\u038f\u03ce\u0391\u03b1\u0392\u03b2\u0393\u03b3\u0394\u03b4\u0395\u03b5\u0396\u03b6\u0397\u03b7\u0398\u03b8\u0399\u03b9\u039a\u03ba\u039b\u03bb\u039c\u03bc\u039d\u03bd\u039e\u03be\u039f\u03bf\u03a0\u03c0\u03a1\u03c1\u03a3\u03c3\u03a4\u03c4\u03a5\u03c5\u03a6\u03c6\u03a7\u03c7\u03a8\u03c8\u03a9\u03c9\u03aa\u03ca\u03ab\u03cb\u03c2\u03c3\u03cf\u03d7\u03d0\u03b2\u03d1\u03b8\u03d5\u03c6\u03d6\u03c0\u03d8\u03d9\u03da\u03db\u03dc\u03dd\u03de\u03df\u03e0\u03e1\u03e2\u03e3\u03e4\u03e5\u03e6\u03e7\u03e8\u03e9\u03ea\u03eb\u03ec\u03ed\u03ee\u03ef\u03f0\u03ba\u03f1\u03c1\u03f4\u03b8\u03f5\u03b5\u03f7\u03f8\u03f9\u03f2\u03fa\u03fb\u03fd\u037b\u03fe\u037c\u03ff\u037d\u0400\u0450\u0401\u0451\u0402\u0452\u0403\u0453\u0404\u0454\u0405\u0455\u0406\u0456\u0407\u0457\u0408\u0458\u0409\u0459\u040a\u045a\u040b\u045b\u040c\u045c\u040d\u045d\u040e\u045e\u040f\u045f\u0410\u0430\u0411\u0431\u0412\u0432\u0413\u0433\u0414\u0434\u0415\u0435\u0416\u0436\u0417\u0437\u0418\u0438\u0419\u0439\u041a\u043a\u041b\u043b\u041c\u043c\u041d\u043d\u041e\u043e\u041f\u043f\u0420\u0440\u0421\u0441\u0422\u0442\u0423\u0443\u0424\u0444\u0425\u0445\u0426\u0446\u0427\u0447\u0428\u0448\u0429\u0449\u042a\u044a\u042b\u044b\u042c\u044c\u042d\u044d\u042e\u044e\u042f\u044f\u0460\u0461\u0462\u0463\u0464\u0465\u0466\u0467\u0468\u0469\u046a\u046b\u046c\u046d\u046e\u046f\u0470\u0471\u0472\u0473\u0474\u0475\u0476\u0477\u0478\u0479\u047a\u047b\u047c\u047d\u047e\u047f\u0480\u0481\u048a\u048b\u048c\u048d\u048e\u048f\u0490\u0491\u0492\u0493\u0494\u0495\u0496\u0497\u0498\u0499\u049a\u049b\u049c\u049d\u049e\u049f\u04a0\u04a1\u04a2\u04a3\u04a4\u04a5\u04a6\u04a7\u04a8\u04a9\u04aa\u04ab\u04ac\u04ad\u04ae\u04af\u04b0\u04b1\u04b2\u04b3\u04b4\u04b5\u04b6\u04b7\u04b8\u04b9\u04ba\u04bb\u04bc\u04bd\u04be\u04bf\u04c0\u04cf\u04c1\u04c2\u04c3\u04c4\u04c5\u04c6\u04c7\u04c8\u04c9\u04ca\u04cb\u04cc\u04cd\u04ce\u04d0\u04d1\u04d2\u04d3\u04d4\u04d5\u04d6\u04d7\u04d8\u04d9\u04da\u04db\u04dc\u04dd\u04de\u04df\u04e0\u04e1\u04e2\u04e3\u04e4\u04e5\u04e6\u04e7\u04e8\u04e9\u04ea\u04eb\u04ec\u04ed\u04ee\u04ef\u04f0\u04f1\u04f2\u04f3\u04f4\u04f5\u04f6\u04f7\u04f8\u04f9\u04fa\u04fb\u04fc\u04fd\u04fe\u04ff\u0500\u0501\u0502\u0503\u0504\u0505\u0506\u0507\u0508\u0509\u050a\u050b\u050c\u050d\u050e\u050f\u0510\u0511\u0512\u0513\u0514\u0515\u0516\u0517\u0518\u0519\u051a\u051b\u051c\u051d\u051e\u051f\u0520\u0521\u0522\u0523\u0524\u0525\u0526\u0527\u0528\u0529\u052a\u052b\u052c\u052d\u052e\u052f\u0531\u0561\u0532\u0562\u0533\u0563\u0534\u0564\u0535\u0565\u0536\u0566\u0537\u0567\u0538\u0568\u0539\u0569\u053a\u056a\u053b\u056b\u053c\u056c\u053d\u056d\u053e\u056e\u053f\u056f\u0540\u0570\u0541\u0571\u0542\u0572\u0543\u0573\u0544\u0574\u0545\u0575\u0546\u0576\u0547\u0577\u0548\u0578\u0549\u0579\u054a\u057a\u054b\u057b\u054c\u057c\u054d\u057d\u054e\u057e\u054f\u057f\u0550\u0580\u0551\u0581\u0552\u0582\u0553\u0583\u0554\u0584\u0555\u0585\u0556\u0586\u10a0\u2d00\u10a1\u2d01\u10a2\u2d02\u10a3\u2d03\u10a4\u2d04\u10a5\u2d05\u10a6\u2d06\u10a7\u2d07\u10a8\u2d08\u10a9\u2d09\u10aa\u2d0a\u10ab\u2d0b\u10ac\u2d0c\u10ad\u2d0d\u10ae\u2d0e\u10af\u2d0f\u10b0\u2d10\u10b1\u2d11\u10b2\u2d12\u10b3\u2d13\u10b4\u2d14\u10b5\u2d15\u10b6\u2d16\u10b7\u2d17\u10b8\u2d18\u10b9\u2d19\u10ba\u2d1a\u10bb\u2d1b\u10bc\u2d1c\u10bd\u2d1d\u10be\u2d1e\u10bf\u2d1f\u10c0\u2d20\u10c1\u2d21\u10c2\u2d22\u10c3\u2d23\u10c4\u2d24\u10c5\u2d25\u10c7\u2d27\u10cd\u2d2d\u13f8\u13f0\u13f9\u13f1\u13fa\u13f2\u13fb\u13f3\u13fc\u13f4\u13fd\u13f5\u1c80\u0432\u1c81\u0434\u1c82\u043e\u1c83\u0441\u1c84\u0442\u1c85\u0442\u1c86\u044a\u1c87\u0463\u1c88\ua64b\u1c90\u10d0\u1c91\u10d1\u1c92\u10d2\u1c93\u10d3\u1c94\u10d4\u1c95\u10d5\u1c96\u10d6\u1c97\u10d7\u1c98\u10d8\u1c99\u10d9\u1c9a\u10da\u1c9b\u10db\u1c9c\u10dc\u1c9d\u10dd\u1c9e\u10de\u1c9f\u10df\u1ca0\u10e0\u1ca1\u10e1\u1ca2\u10e2\u1ca3\u10e3\u1ca4\u10e4\u1ca5\u10e5\u1ca6\u10e6\u1ca7\u10e7\u1ca8\u10e8\u1ca9\u10e9\u1caa\u10ea\u1cab\u10eb\u1cac\u10ec\u1cad\u10ed\u1cae\u10ee\u1caf\u10ef\u1cb0\u10f0\u1cb1\u10f1\u1cb2\u10f2\u1cb3\u10f3\u1cb4\u10f4\u1cb5\u10f5\u1cb6\u10f6\u1cb7\u10f7\u1cb8\u10f8\u1cb9\u10f9\u1cba\u10fa\u1cbd\u10fd\u1cbe\u10fe\u1cbf\u10ff\u1e00\u1e01\u1e02\u1e03\u1e04\u1e05\u1e06\u1e07\u1e08\u1e09\u1e0a\u1e0b\u1e0c\u1e0d\u1e0e\u1e0f\u1e10\u1e11\u1e12\u1e13\u1e14\u1e15\u1e16\u1e17\u1e18\u1e19\u1e1a\u1e1b\u1e1c\u1e1d\u1e1e\u1e1f\u1e20\u1e21\u1e22\u1e23\u1e24\u1e25\u1e26\u1e27\u1e28\u1e29\u1e2a\u1e2b\u1e2c\u1e2d\u1e2e\u1e2f\u1e30\u1e31\u1e32\u1e33\u1e34\u1e35\u1e36\u1e37\u1e38\u1e39\u1e3a\u1e3b\u1e3c\u1e3d\u1e3e\u1e3f\u1e40\u1e41\u1e42\u1e43\u1e44\u1e45\u1e46\u1e47\u1e48\u1e49\u1e4a\u1e4b\u1e4c\u1e4d\u1e4e\u1e4f\u1e50\u1e51\u1e52\u1e53\u1e54\u1e55\u1e56\u1e57\u1e58\u1e59\u1e5a\u1e5b\u1e5c\u1e5d\u1e5e\u1e5f\u1e60\u1e61\u1e62\u1e63\u1e64\u1e65\u1e66\u1e67\u1e68\u1e69\u1e6a\u1e6b\u1e6c\u1e6d\u1e6e\u1e6f\u1e70\u1e71\u1e72\u1e73\u1e74\u1e75\u1e76\u1e77\u1e78\u1e79\u1e7a\u1e7b\u1e7c\u1e7d\u1e7e\u1e7f\u1e80\u1e81\u1e82\u1e83\u1e84\u1e85\u1e86\u1e87\u1e88\u1e89\u1e8a\u1e8b\u1e8c\u1e8d\u1e8e\u1e8f\u1e90\u1e91\u1e92\u1e93\u1e94\u1e95\u1e9b\u1e61\u1e9e\xdf\u1ea0\u1ea1\u1ea2\u1ea3\u1ea4\u1ea5\u1ea6\u1ea7\u1ea8\u1ea9\u1eaa\u1eab\u1eac\u1ead\u1eae\u1eaf\u1eb0\u1eb1\u1eb2\u1eb3\u1eb4\u1eb5\u1eb6\u1eb7\u1eb8\u1eb9\u1eba\u1ebb\u1ebc\u1ebd\u1ebe\u1ebf\u1ec0\u1ec1\u1ec2\u1ec3\u1ec4\u1ec5\u1ec6\u1ec7\u1ec8\u1ec9\u1eca\u1ecb\u1ecc\u1ecd\u1ece\u1ecf\u1ed0\u1ed1\u1ed2\u1ed3\u1ed4\u1ed5\u1ed6\u1ed7\u1ed8\u1ed9\u1eda\u1edb\u1edc\u1edd\u1ede\u1edf\u1ee0\u1ee1\u1ee2\u1ee3\u1ee4\u1ee5\u1ee6\u1ee7\u1ee8\u1ee9\u1eea\u1eeb\u1eec\u1eed\u1eee\u1eef\u1ef0\u1ef1\u1ef2\u1ef3\u1ef4\u1ef5\u1ef6\u1ef7\u1ef8\u1ef9\u1efa\u1efb\u1efc\u1efd\u1efe\u1eff\u1f08\u1f00\u1f09\u1f01\u1f0a\u1f02\u1f0b\u1f03\u1f0c\u1f04\u1f0d\u1f05\u1f0e\u1f06\u1f0f\u1f07\u1f18\u1f10\u1f19\u1f11\u1f1a\u1f12\u1f1b\u1f13\u1f1c\u1f14\u1f1d\u1f15\u1f28\u1f20\u1f29\u1f21\u1f2a\u1f22\u1f2b\u1f23\u1f2c\u1f24\u1f2d\u1f25\u1f2e\u1f26\u1f2f\u1f27\u1f38\u1f30\u1f39\u1f31\u1f3a\u1f32\u1f3b\u1f33\u1f3c\u1f34\u1f3d\u1f35\u1f3e\u1f36\u1f3f\u1f37\u1f48\u1f40\u1f49\u1f41\u1f4a\u1f42\u1f4b\u1f43\u1f4c\u1f44\u1f4d\u1f45\u1f59\u1f51\u1f5b\u1f53\u1f5d\u1f55\u1f5f\u1f57\u1f68\u1f60\u1f69\u1f61\u1f6a\u1f62\u1f6b\u1f63\u1f6c\u1f64\u1f6d\u1f65\u1f6e\u1f66\u1f6f\u1f67\u1f88\u1f80\u1f89\u1f81\u1f8a\u1f82\u1f8b\u1f83\u1f8c\u1f84\u1f8d\u1f85\u1f8e\u1f86\u1f8f\u1f87\u1f98\u1f90\u1f99\u1f91\u1f9a\u1f92\u1f9b\u1f93\u1f9c\u1f94\u1f9d\u1f95\u1f9e\u1f96\u1f9f\u1f97\u1fa8\u1fa0\u1fa9\u1fa1\u1faa\u1fa2\u1fab\u1fa3\u1fac\u1fa4\u1fad\u1fa5\u1fae\u1fa6\u1faf\u1fa7\u1fb8\u1fb0\u1fb9\u1fb1\u1fba\u1f70\u1fbb\u1f71\u1fbc\u1fb3\u1fbe\u03b9\u1fc8\u1f72\u1fc9\u1f73\u1fca\u1f74\u1fcb\u1f75\u1fcc\u1fc3\u1fd8\u1fd0\u1fd9\u1fd1\u1fda\u1f76\u1fdb\u1f77\u1fe8\u1fe0\u1fe9\u1fe1\u1fea\u1f7a\u1feb\u1f7b\u1fec\u1fe5\u1ff8\u1f78\u1ff9\u1f79\u1ffa\u1f7c\u1ffb\u1f7d\u1ffc\u1ff3\u2126\u03c9\u212ak\u212b\xe5\u2132\u214e\u2160\u2170\u2161\u2171\u2162\u2172\u2163\u2173\u2164\u2174\u2165\u2175\u2166\u2176\u2167\u2177\u2168\u2178\u2169\u2179\u216a\u217a\u216b\u217b\u216c\u217c\u216d\u217d\u216e\u217e\u216f\u217f\u2183\u2184\u24b6\u24d0\u24b7\u24d1\u24b8\u24d2\u24b9\u24d3\u24ba\u24d4\u24bb\u24d5\u24bc\u24d6\u24bd\u24d7\u24be\u24d8\u24bf\u24d9\u24c0\u24da\u24c1\u24db\u24c2\u24dc\u24c3\u24dd\u24c4\u24de\u24c5\u24df\u24c6\u24e0\u24c7\u24e1\u24c8\u24e2\u24c9\u24e3\u24ca\u24e4\u24cb\u24e5\u24cc\u24e6\u24cd\u24e7\u24ce\u24e8\u24cf\u24e9\u2c00\u2c30\u2c01\u2c31\u2c02\u2c32\u2c03\u2c33\u2c04\u2c34\u2c05\u2c35\u2c06\u2c36\u2c07\u2c37\u2c08\u2c38\u2c09\u2c39\u2c0a\u2c3a\u2c0b\u2c3b\u2c0c\u2c3c\u2c0d\u2c3d\u2c0e\u2c3e\u2c0f\u2c3f\u2c10\u2c40\u2c11\u2c41\u2c12\u2c42\u2c13\u2c43\u2c14\u2c44\u2c15\u2c45\u2c16\u2c46\u2c17\u2c47\u2c18\u2c48\u2c19\u2c49\u2c1a\u2c4a\u2c1b\u2c4b\u2c1c\u2c4c\u2c1d\u2c4d\u2c1e\u2c4e\u2c1f\u2c4f\u2c20\u2c50\u2c21\u2c51\u2c22\u2c52\u2c23\u2c53\u2c24\u2c54\u2c25\u2c55\u2c26\u2c56\u2c27\u2c57\u2c28\u2c58\u2c29\u2c59\u2c2a\u2c5a\u2c2b\u2c5b\u2c2c\u2c5c\u2c2d\u2c5d\u2c2e\u2c5e\u2c60\u2c61\u2c62\u026b\u2c63\u1d7d\u2c64\u027d\u2c67\u2c68\u2c69\u2c6a\u2c6b\u2c6c\u2c6d\u0251\u2c6e\u0271\u2c6f\u0250\u2c70\u0252\u2c72\u2c73\u2c75\u2c76\u2c7e\u023f\u2c7f\u0240\u2c80\u2c81\u2c82\u2c83\u2c84\u2c85\u2c86\u2c87\u2c88\u2c89\u2c8a\u2c8b\u2c8c\u2c8d\u2c8e\u2c8f\u2c90\u2c91\u2c92\u2c93\u2c94\u2c95\u2c96\u2c97\u2c98\u2c99\u2c9a\u2c9b\u2c9c\u2c9d\u2c9e\u2c9f\u2ca0\u2ca1\u2ca2\u2ca3\u2ca4\u2ca5\u2ca6\u2ca7\u2ca8\u2ca9\u2caa\u2cab\u2cac\u2cad\u2cae\u2caf\u2cb0\u2cb1\u2cb2\u2cb3\u2cb4\u2cb5\u2cb6\u2cb7\u2cb8\u2cb9\u2cba\u2cbb\u2cbc\u2cbd\u2cbe\u2cbf\u2cc0\u2cc1\u2cc2\u2cc3\u2cc4\u2cc5\u2cc6\u2cc7\u2cc8\u2cc9\u2cca\u2ccb\u2ccc\u2ccd\u2cce\u2ccf\u2cd0\u2cd1\u2cd2\u2cd3\u2cd4\u2cd5\u2cd6\u2cd7\u2cd8\u2cd9\u2cda\u2cdb\u2cdc\u2cdd\u2cde\u2cdf\u2ce0\u2ce1\u2ce2\u2ce3\u2ceb\u2cec\u2ced\u2cee\u2cf2\u2cf3\ua640\ua641\ua642\ua643\ua644\ua645\ua646\ua647\ua648\ua649\ua64a\ua64b\ua64c\ua64d\ua64e\ua64f\ua650\ua651\ua652\ua653\ua654\ua655\ua656\ua657\ua658\ua659\ua65a\ua65b\ua65c\ua65d\ua65e\ua65f\ua660\ua661\ua662\ua663\ua664\ua665\ua666\ua667\ua668\ua669\ua66a\ua66b\ua66c\ua66d\ua680\ua681\ua682\ua683\ua684\ua685\ua686\ua687\ua688\ua689\ua68a\ua68b\ua68c\ua68d\ua68e\ua68f\ua690\ua691\ua692\ua693\ua694\ua695\ua696\ua697\ua698\ua699\ua69a\ua69b\ua722\ua723\ua724\ua725\ua726\ua727\ua728\ua729\ua72a\ua72b\ua72c\ua72d\ua72e\ua72f\ua732\ua733\ua734\ua735\ua736\ua737\ua738\ua739\ua73a\ua73b\ua73c\ua73d\ua73e\ua73f\ua740\ua741\ua742\ua743\ua744\ua745\ua746\ua747\ua748\ua749\ua74a\ua74b\ua74c\ua74d\ua74e\ua74f\ua750\ua751\ua752\ua753\ua754\ua755\ua756\ua757\ua758\ua759\ua75a\ua75b\ua75c\ua75d\ua75e\ua75f\ua760\ua761\ua762\ua763\ua764\ua765\ua766\ua767\ua768\ua769\ua76a\ua76b\ua76c\ua76d\ua76e\ua76f\ua779\ua77a\ua77b\ua77c\ua77d\u1d79\ua77e\ua77f\ua780\ua781\ua782\ua783\ua784\ua785\ua786\ua787\ua78b\ua78c\ua78d\u0265\ua790\ua791\ua792\ua793\ua796\ua797\ua798\ua799\ua79a\ua79b\ua79c\ua79d\ua79e\ua79f\ua7a0\ua7a1\ua7a2\ua7a3\ua7a4\ua7a5\ua7a6\ua7a7\ua7a8\ua7a9\ua7aa\u0266\ua7ab\u025c\ua7ac\u0261\ua7ad\u026c\ua7ae\u026a\ua7b0\u029e\ua7b1\u0287\ua7b2\u029d\ua7b3\uab53\ua7b4\ua7b5\ua7b6\ua7b7\ua7b8\ua7b9\ua7ba\ua7bb\ua7bc\ua7bd\ua7be\ua7bf\ua7c2\ua7c3\ua7c4\ua794\ua7c5\u0282\ua7c6\u1d8e\ua7c7\ua7c8\ua7c9\ua7ca\ua7f5\ua7f6\uab70\u13a0\uab71\u13a1\uab72\u13a2\uab73\u13a3\uab74\u13a4\uab75\u13a5\uab76\u13a6\uab77\u13a7\uab78\u13a8\uab79\u13a9\uab7a\u13aa\uab7b\u13ab\uab7c\u13ac\uab7d\u13ad\uab7e\u13ae\uab7f\u13af\uab80\u13b0\uab81\u13b1\uab82\u13b2\uab83\u13b3\uab84\u13b4\uab85\u13b5\uab86\u13b6\uab87\u13b7\uab88\u13b8\uab89\u13b9\uab8a\u13ba\uab8b\u13bb\uab8c\u13bc\uab8d\u13bd\uab8e\u13be\uab8f\u13bf\uab90\u13c0\uab91\u13c1\uab92\u13c2\uab93\u13c3\uab94\u13c4\uab95\u13c5\uab96\u13c6\uab97\u13c7\uab98\u13c8\uab99\u13c9\uab9a\u13ca\uab9b\u13cb\uab9c\u13cc\uab9d\u13cd\uab9e\u13ce\uab9f\u13cf\uaba0\u13d0\uaba1\u13d1\uaba2\u13d2\uaba3\u13d3\uaba4\u13d4\uaba5\u13d5\uaba6\u13d6\uaba7\u13d7\uaba8\u13d8\uaba9\u13d9\uabaa\u13da\uabab\u13db\uabac\u13dc\uabad\u13dd\uabae\u13de\uabaf\u13df\uabb0\u13e0\uabb1\u13e1\uabb2\u13e2\uabb3\u13e3\uabb4\u13e4\uabb5\u13e5\uabb6\u13e6\uabb7\u13e7\uabb8\u13e8\uabb9\u13e9\uabba\u13ea\uabbb\u13eb\uabbc\u13ec\uabbd\u13ed\uabbe\u13ee\uabbf\u13ef\uff21\uff41\uff22\uff42\uff23\uff43\uff24\uff44\uff25\uff45\uff26\uff46\uff27\uff47\uff28\uff48\uff29\uff49\uff2a\uff4a\uff2b\uff4b\uff2c\uff4c\uff2d\uff4d\uff2e\uff4e\uff2f\uff4f\uff30\uff50\uff31\uff51\uff32\uff52\uff33\uff53\uff34\uff54\uff35\uff55\uff36\uff56\uff37\uff57\uff38\uff58\uff39\uff59\uff3a\uff5a\U00010400\U00010428\U00010401\U00010429\U00010402\U0001042a\U00010403\U0001042b\U00010404\U0001042c\U00010405\U0001042d\U00010406\U0001042e\U00010407\U0001042f\U00010408\U00010430\U00010409\U00010431\U0001040a\U00010432\U0001040b\U00010433\U0001040c\U00010434\U0001040d\U00010435\U0001040e\U00010436\U0001040f\U00010437\U00010410\U00010438\U00010411\U00010439\U00010412\U0001043a\U00010413\U0001043b\U00010414\U0001043c\U00010415\U0001043d\U00010416\U0001043e\U00010417\U0001043f\U00010418\U00010440\U00010419\U00010441\U0001041a\U00010442\U0001041b\U00010443\U0001041c\U00010444\U0001041d\U00010445\U0001041e\U00010446\U0001041f\U00010447\U00010420\U00010448\U00010421\U00010449\U00010422\U0001044a\U00010423\U0001044b\U00010424\U0001044c\U00010425\U0001044d\U00010426\U0001044e\U00010427\U0001044f\U000104b0\U000104d8\U000104b1\U000104d9\U000104b2\U000104da\U000104b3\U000104db\U000104b4\U000104dc\U000104b5\U000104dd\U000104b6\U000104de\U000104b7\U000104df\U000104b8\U000104e0\U000104b9\U000104e1\U000104ba\U000104e2\U000104bb\U000104e3\U000104bc\U000104e4\U000104bd\U000104e5\U000104be\U000104e6\U000104bf\U000104e7\U000104c0\U000104e8\U000104c1\U000104e9\U000104c2\U000104ea\U000104c3\U000104eb\U000104c4\U000104ec\U000104c5\U000104ed\U000104c6\U000104ee\U000104c7\U000104ef\U000104c8\U000104f0\U000104c9\U000104f1\U000104ca\U000104f2\U000104cb\U000104f3\U000104cc\U000104f4\U000104cd\U000104f5\U000104ce\U000104f6\U000104cf\U000104f7\U000104d0\U000104f8\U000104d1\U000104f9\U000104d2\U000104fa\U000104d3\U000104fb\U00010c80\U00010cc0\U00010c81\U00010cc1\U00010c82\U00010cc2\U00010c83\U00010cc3\U00010c84\U00010cc4\U00010c85\U00010cc5\U00010c86\U00010cc6\U00010c87\U00010cc7\U00010c88\U00010cc8\U00010c89\U00010cc9\U00010c8a\U00010cca\U00010c8b\U00010ccb\U00010c8c\U00010ccc\U00010c8d\U00010ccd\U00010c8e\U00010cce\U00010c8f\U00010ccf\U00010c90\U00010cd0\U00010c91\U00010cd1\U00010c92\U00010cd2\U00010c93\U00010cd3\U00010c94\U00010cd4\U00010c95\U00010cd5\U00010c96\U00010cd6\U00010c97\U00010cd7\U00010c98\U00010cd8\U00010c99\U00010cd9\U00010c9a\U00010cda\U00010c9b\U00010cdb\U00010c9c\U00010cdc\U00010c9d\U00010cdd\U00010c9e\U00010cde\U00010c9f\U00010cdf\U00010ca0\U00010ce0\U00010ca1\U00010ce1\U00010ca2\U00010ce2\U00010ca3\U00010ce3\U00010ca4\U00010ce4\U00010ca5\U00010ce5\U00010ca6\U00010ce6\U00010ca7\U00010ce7\U00010ca8\U00010ce8\U00010ca9\U00010ce9\U00010caa\U00010cea\U00010cab\U00010ceb\U00010cac\U00010cec\U00010cad\U00010ced\U00010cae\U00010cee\U00010caf\U00010cef\U00010cb0\U00010cf0\U00010cb1\U00010cf1\U00010cb2\U00010cf2\U000118a0\U000118c0\U000118a1\U000118c1\U000118a2\U000118c2\U000118a3\U000118c3\U000118a4\U000118c4\U000118a5\U000118c5\U000118a6\U000118c6\U000118a7\U000118c7\U000118a8\U000118c8\U000118a9\U000118c9\U000118aa\U000118ca\U000118ab\U000118cb\U000118ac\U000118cc\U000118ad\U000118cd\U000118ae\U000118ce\U000118af\U000118cf\U000118b0\U000118d0\U000118b1\U000118d1\U000118b2\U000118d2\U000118b3\U000118d3\U000118b4\U000118d4\U000118b5\U000118d5\U000118b6\U000118d6\U000118b7\U000118d7\U000118b8\U000118d8\U000118b9\U000118d9\U000118ba\U000118da\U000118bb\U000118db\U000118bc\U000118dc\U000118bd\U000118dd\U000118be\U000118de\U000118bf\U000118df\U00016e40\U00016e60\U00016e41\U00016e61\U00016e42\U00016e62\U00016e43\U00016e63\U00016e44\U00016e64\U00016e45\U00016e65\U00016e46\U00016e66\U00016e47\U00016e67\U00016e48\U00016e68\U00016e49\U00016e69\U00016e4a\U00016e6a\U00016e4b\U00016e6b\U00016e4c\U00016e6c\U00016e4d\U00016e6d\U00016e4e\U00016e6e\U00016e4f\U00016e6f\U00016e50\U00016e70\U00016e51\U00016e71\U00016e52\U00016e72\U00016e53\U00016e73\U00016e54\U00016e74\U00016e55\U00016e75\U00016e56\U00016e76\U00016e57\U00016e77\U00016e58\U00016e78\U00016e59\U00016e79\U00016e5a\U00016e7a\U00016e5b\U00016e7b\U00016e5c\U00016e7c\U00016e5d\U00016e7d\U00016e5e\U00016e7e\U00016e5f\U00016e7f\U0001e900\U0001e922\U0001e901\U0001e923\U0001e902\U0001e924\U0001e903\U0001e925\U0001e904\U0001e926\U0001e905\U0001e927\U0001e906\U0001e928\U0001e907\U0001e929\U0001e908\U0001e92a\U0001e909\U0001e92b\U0001e90a\U0001e92c\U0001e90b\U0001e92d\U0001e90c\U0001e92e\U0001e90d\U0001e92f\U0001e90e\U0001e930\U0001e90f\U0001e931\U0001e910\U0001e932\U0001e911\U0001e933\U0001e912\U0001e934\U0001e913\U0001e935\U0001e914\U0001e936\U0001e915\U0001e937\U0001e916\U0001e938\U0001e917\U0001e939\U0001e918\U0001e93a\U0001e919\U0001e93b\U0001e91a\U0001e93c\U0001e91b\U0001e93d\U0001e91c\U0001e93e\U0001e91d\U0001e93f\U0001e91e\U0001e940\U0001e91f\U0001e941\U0001e920\U0001e942\U0001e921\U0001e943'


def _build_table() -> bytes:
    table = bytearray(0x110000)
    starts = _STARTS
    classes = _CLASSES
    for i in range(len(starts) - 1):
        cls = classes[i]
        if cls:
            table[starts[i] : starts[i + 1]] = bytes([cls]) * (starts[i + 1] - starts[i])
    last = len(starts) - 1
    if classes[last]:
        table[starts[last] :] = bytes([classes[last]]) * (0x110000 - starts[last])
    return bytes(table)


WORD_CLASS_TABLE = _build_table()

SIMPLE_FOLD = {ord(src): dst for src, dst in zip(_FOLD_BLOB[::2], _FOLD_BLOB[1::2])}
