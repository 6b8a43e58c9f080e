// Frozen reference values, generated by tools/highprec_reference.py
// (>= 50 significant digits; truncated to double literals here).
// Regenerate: python3 tools/highprec_reference.py --json tests/data/highprec_reference.json
#pragma once

namespace refvals {
inline constexpr double kCoshO12_equal01 = 800.8333541646;
inline constexpr double kArcP_01_005_02 = 0.024941522021954692;
inline constexpr double kFront_p = 0.024941522021954692;
inline constexpr double kFront_q = 0.025058477978045307;
inline constexpr double kFront_o12 = 8.0736634835068095;
inline constexpr double kFront_o13 = 6.6858086370661152;
inline constexpr double kFront_a1 = 4.3847327022065157;
inline constexpr double kFront_s = 4.3823896264912365;
inline constexpr double kFront_b1p = 0.88181438171869697;
inline constexpr double kFront_b1q = 0.8851279881519436;
inline constexpr double kFront_oP = 4.0380029144563654;
inline constexpr double kFront_oQ = 4.0356578338931932;
inline constexpr double kFront_oR = 4.035660569050445;
inline constexpr double kFront_oS = 2.6501508031729224;
inline constexpr double kDh_x1_p0025 = 0.038588122727173872;
inline constexpr double kB1LimitSmall = 0.88137358702025015;
inline constexpr double kAsinh1 = 0.88137358701954305;
inline constexpr double kEnergyP_equal01 = 61.520056181238942;
inline constexpr double kEnergyP_mixed = 61.66648653895323;
inline constexpr double kEnergyR_mixed = 61.519169887330776;
inline constexpr double kEnergyQ_mixed = 61.376957676949218;
inline constexpr double kEnergyS_mixed = 14.396987160869102;
inline constexpr double kEnergyPants_mixed = 198.95960126410233;
inline constexpr double kGmap_re = 0.48029330057216091;
inline constexpr double kGmap_im = 1.5772127864953875;
inline constexpr double kCosh1 = 1.5430806348152437;
inline constexpr double kCosh088137 = 1.4142099753626503;
inline constexpr double kTrigGap_A2 = 0.00083333854146846293;
inline constexpr double kTrigGap_A05 = -0.0033331111220365516;
inline constexpr double kRel0_tight = 0.49999062714790427;
inline constexpr double kRel1_tight = 0.50000937285209568;
}  // namespace refvals
