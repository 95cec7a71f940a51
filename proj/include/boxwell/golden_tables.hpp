// Built-in reference spectra used by the regression command and the
// acceptance suite.  Two geometries are covered: table 1 is the symmetric
// box (a = 3, b = 1, c = 3) and table 2 the asymmetric one (a = 2, b = 1,
// c = 3).  Values are quoted to the four decimals of the archived source.
//
// Special rows list a critical height/depth in the v0 column; for those the
// solver first refines v0 to full precision from the matching special-order
// root, and the level at the special position equals 0 (zero-energy rows) or
// v0 itself (barrier-top rows).
//
// Row 14 of table 2 is omitted: the archived source entry is corrupt.  The
// E2 cell of table 2 row 11 (printed 4.9066) is flagged corrupt as well: the
// determinant route and the independent shooting integrator both give 4.9867,
// and the column-wise shifts from the nearby v0 = 3 row support that value,
// so the printed cell is a digit error.  In table 1 row 7, a secondary source
// variant prints 2.0305 for E4; the value 2.3052 below is consistent with
// recomputation and is used throughout.
#pragma once

#include <array>

#include "boxwell/potential.hpp"

namespace boxwell::golden {

enum class SpecialTag { None, ZeroEnergy, BarrierTop };

struct TableRow {
  int table;                     // 1 = symmetric, 2 = asymmetric
  int row;                       // row number within that table
  double v0;                     // as printed (critical rows: 4-decimal value)
  std::array<double, 6> levels;  // E0..E5; special cell repeats v0 or is 0
  SpecialTag special;
  int special_order;             // level index of the special state, or -1
  int corrupt_col;               // column excluded from comparison, or -1
};

inline constexpr std::array<TableRow, 29> kRows{{
    // table 1: symmetric geometry, b = 1, d1 = d2 = 2
    {1, 1, 0.0, {0.2741, 1.0966, 2.4674, 4.3864, 6.8538, 9.8696}, SpecialTag::None, -1, -1},
    {1, 2, 10.0, {1.8201, 1.8260, 6.9444, 7.0626, 11.7571, 14.2955}, SpecialTag::None, -1, -1},
    {1, 3, -5.0, {-3.8520, -0.8965, 1.5636, 2.8132, 5.3212, 8.5313}, SpecialTag::None, -1, -1},
    {1, 4, -0.4267, {0.0, 1.0077, 2.3368, 4.2153, 6.7348, 9.7303}, SpecialTag::ZeroEnergy, 0, -1},
    {1, 5, -3.3730, {-2.3768, 0.0, 1.7942, 3.1867, 5.8598, 8.9105}, SpecialTag::ZeroEnergy, 1, -1},
    {1, 6, -10.8393, {-9.4034, -5.3272, 0.0, 2.1613, 3.4687, 7.2319}, SpecialTag::ZeroEnergy, 2, -1},
    {1, 7, -23.1923, {-21.5077, -16.5516, -8.7346, 0.0, 2.3052, 3.5647}, SpecialTag::ZeroEnergy, 3, -1},
    {1, 8, -0.5, {-0.0497, 0.9913, 2.3165, 4.1861, 6.7142, 9.7070}, SpecialTag::None, -1, -1},
    {1, 9, -3.0, {-2.0483, 0.1717, 1.8469, 3.2933, 5.9776, 9.0031}, SpecialTag::None, -1, -1},
    {1, 10, 0.6168, {0.6168, 1.2069, 2.7001, 4.6341, 7.0253, 10.0817}, SpecialTag::BarrierTop, 0, -1},
    {1, 11, 1.3098, {0.9193, 1.3098, 3.0287, 4.9076, 7.2197, 10.3359}, SpecialTag::BarrierTop, 1, -1},
    {1, 12, 5.5516, {1.6280, 1.6639, 5.5516, 6.2605, 8.7725, 12.2097}, SpecialTag::BarrierTop, 2, -1},
    {1, 13, 6.4693, {1.6836, 1.7072, 5.9698, 6.4693, 9.2801, 12.6555}, SpecialTag::BarrierTop, 3, -1},
    {1, 14, 0.7, {0.6577, 1.2204, 2.7358, 4.6674, 7.04851, 10.1114}, SpecialTag::None, -1, -1},
    {1, 15, 5.0, {1.5872, 1.6342, 5.2618, 6.1215, 8.5044, 11.9442}, SpecialTag::None, -1, -1},
    // table 2: asymmetric geometry, b = 1, d1 = 1, d2 = 2
    {2, 1, 0.0, {0.3947, 1.5791, 3.5530, 6.3165, 9.8696, 14.2122}, SpecialTag::None, -1, -1},
    {2, 2, 10.0, {1.8230, 5.3753, 7.0049, 11.8832, 14.9494, 18.6187}, SpecialTag::None, -1, -1},
    {2, 3, -5.0, {-3.840, -0.7726, 2.0291, 4.5628, 8.2361, 12.1006}, SpecialTag::None, -1, -1},
    {2, 4, -0.5695, {0.0, 1.3772, 3.3188, 6.1236, 9.6476, 13.9614}, SpecialTag::ZeroEnergy, 0, -1},
    {2, 5, -3.7466, {-2.6896, 0.0, 2.3015, 5.0178, 8.5927, 12.6006}, SpecialTag::ZeroEnergy, 1, -1},
    {2, 6, -11.2902, {-9.8388, -5.6968, 0.0, 2.7129, 6.5210, 10.1178}, SpecialTag::ZeroEnergy, 2, -1},
    {2, 7, -23.6678, {-21.9771, -17.0001, -9.1297, 0.0, 2.8689, 7.6373}, SpecialTag::ZeroEnergy, 3, -1},
    {2, 8, -0.5, {0.0508, 1.4012, 3.3468, 6.1472, 9.6741, 13.9920}, SpecialTag::None, -1, -1},
    {2, 9, -3.0, {-2.0190, 0.3995, 2.4901, 5.2842, 8.8175, 12.9108}, SpecialTag::None, -1, -1},
    {2, 10, 0.8753, {0.8753, 1.9470, 3.9276, 6.6146, 10.2338, 14.5981}, SpecialTag::BarrierTop, 0, -1},
    {2, 11, 3.2699, {1.4520, 3.2699, 4.9066, 7.5021, 11.3686, 15.6440}, SpecialTag::BarrierTop, 1, 2},  // E2 printed value is a digit error; recomputed 4.9867
    {2, 12, 6.1213, {1.6776, 4.4754, 6.1213, 8.9904, 12.8985, 16.8682}, SpecialTag::BarrierTop, 2, -1},
    {2, 13, 15.8550, {1.9382, 6.1100, 7.6114, 15.8550, 18.0552, 21.7509}, SpecialTag::BarrierTop, 3, -1},
    {2, 15, 3.0, {1.4171, 3.1233, 4.8670, 7.3917, 11.2316, 15.5272}, SpecialTag::None, -1, -1},
}};

inline PotentialSpec spec_for_table(int table, double v0) {
  return table == 1 ? make_spec(3.0, 1.0, 3.0, v0) : make_spec(2.0, 1.0, 3.0, v0);
}

}  // namespace boxwell::golden
