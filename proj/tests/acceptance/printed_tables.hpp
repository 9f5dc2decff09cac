#pragma once

// Cost tables as printed: four decimals, alpha = s/100 for s = 1..33.

namespace mediocre::acceptance {

struct PrintedFRow {
    double alpha;
    unsigned l;
    double g_l;
    double g_l1;
    double f;
};

struct PrintedConstantsRow {
    double alpha;
    double c_a1;
    double c_yao;
};

inline constexpr PrintedFRow printed_f_table[] = {
    {0.01, 9, 1.1312, 1.1316, 1.1312},
    {0.02, 8, 1.2382, 1.2410, 1.2382},
    {0.03, 7, 1.3382, 1.3378, 1.3378},
    {0.04, 6, 1.4400, 1.4275, 1.4275},
    {0.05, 6, 1.5187, 1.5168, 1.5168},
    {0.06, 6, 1.5975, 1.6060, 1.5975},
    {0.07, 5, 1.6934, 1.6762, 1.6762},
    {0.08, 5, 1.7612, 1.7550, 1.7550},
    {0.09, 5, 1.8290, 1.8337, 1.8290},
    {0.10, 5, 1.8968, 1.9125, 1.8968},
    {0.11, 4, 1.9937, 1.9646, 1.9646},
    {0.12, 4, 2.0500, 2.0325, 2.0320},
    {0.13, 4, 2.1062, 2.1003, 2.1003},
    {0.14, 4, 2.1625, 2.1681, 2.1625},
    {0.15, 4, 2.2187, 2.2359, 2.2187},
    {0.16, 4, 2.2750, 2.3037, 2.2750},
    {0.17, 3, 2.3687, 2.3312, 2.3312},
    {0.18, 3, 2.4125, 2.3875, 2.3875},
    {0.19, 3, 2.4562, 2.4437, 2.4437},
    {0.20, 3, 2.5000, 2.5000, 2.5000},
    {0.21, 3, 2.5437, 2.5562, 2.5437},
    {0.22, 3, 2.5875, 2.6125, 2.5875},
    {0.23, 3, 2.6312, 2.6687, 2.6312},
    {0.24, 3, 2.6750, 2.7250, 2.6750},
    {0.25, 2, 2.7500, 2.7187, 2.7187},
    {0.26, 2, 2.7800, 2.7625, 2.7625},
    {0.27, 2, 2.8100, 2.8062, 2.8062},
    {0.28, 2, 2.8400, 2.8500, 2.8400},
    {0.29, 2, 2.8700, 2.8937, 2.8700},
    {0.30, 2, 2.9000, 2.9375, 2.9000},
    {0.31, 2, 2.9300, 2.9812, 2.9300},
    {0.32, 2, 2.9600, 3.0250, 2.9600},
    {0.33, 2, 2.9900, 3.0687, 2.9900},
};

inline constexpr PrintedConstantsRow printed_constants_table[] = {
    {0.01, 1.1191, 1.1210},
    {0.02, 1.2137, 1.2175},
    {0.03, 1.2987, 1.3069},
    {0.04, 1.3775, 1.3846},
    {0.05, 1.4484, 1.4625},
    {0.06, 1.5162, 1.5300},
    {0.07, 1.5812, 1.5975},
    {0.08, 1.6375, 1.6637},
    {0.09, 1.6937, 1.7193},
    {0.10, 1.7500, 1.7750},
    {0.11, 1.7937, 1.8306},
    {0.12, 1.8375, 1.8850},
    {0.13, 1.8812, 1.9275},
    {0.14, 1.9200, 1.9700},
    {0.15, 1.9500, 2.0125},
    {0.16, 1.9800, 2.0550},
    {0.17, 2.0000, 2.0925},
    {0.18, 2.0000, 2.1200},
    {0.19, 2.0000, 2.1475},
    {0.20, 2.0000, 2.1750},
    {0.21, 2.0000, 2.2025},
    {0.22, 2.0000, 2.2200},
    {0.23, 2.0000, 2.2300},
    {0.24, 2.0000, 2.2400},
    {0.25, 2.0000, 2.2500},
    {0.26, 2.0000, 2.2200},
    {0.27, 2.0000, 2.1900},
    {0.28, 2.0000, 2.1600},
    {0.29, 2.0000, 2.1300},
    {0.30, 2.0000, 2.1000},
    {0.31, 2.0000, 2.0700},
    {0.32, 2.0000, 2.0400},
    {0.33, 2.0000, 2.0100},
};

} // namespace mediocre::acceptance
