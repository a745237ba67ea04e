#pragma once

// High-precision reference values for the test suite, computed once with a
// 50-digit arbitrary-precision setup and pasted here verbatim. Everything a
// test compares against at tight tolerance should come from this header, not
// from the library under test.

namespace ref {

inline constexpr double euler = 0.5772156649015328606065121;
inline constexpr double stieltjes1 = -0.07281584548367672486058638;
inline constexpr double stieltjes2 = -0.009690363192872318484530386;

inline constexpr double zeta2 = 1.644934066848226436472415;
inline constexpr double zeta3 = 1.202056903159594285399738;
inline constexpr double zeta_prime2 = -0.9375482543158437537025741;
inline constexpr double zeta_prime3 = -0.1981262428856368533306818;
inline constexpr double zeta_prime4 = -0.06891126589612537984882937;

inline constexpr double log_2pi = 1.837877066409345483560659;
inline constexpr double log_pi_half = 0.4515827052894548647261952;
inline constexpr double log_4_over_pi = 0.2415644752704904446910369;

// S = sum log(n+1) / (n (n+1)).
inline constexpr double log_weighted_sum = 1.2577468869443696300099;
// int_0^1 psi^2(1+x) dx.
inline constexpr double psi_square_integral = 0.07999394922493293735379658;

inline constexpr double gompertz = 0.5963473623231940743410785;

inline constexpr double ei_neg1 = -0.2193839343955202736771638;
inline constexpr double ei_1 = 1.895117816355936755466521;
inline constexpr double ei_neg_half = -0.5597735947761608117467959;
inline constexpr double ei_2p5 = 7.073765894578600711923552;
inline constexpr double ei_neg35 = -1.752705938994737200054833e-17;
inline constexpr double ei_35 = 46690550144661.59544500146;
inline constexpr double li_half = -0.3786710430610879767272072;
inline constexpr double li_2 = 1.045163780117492784844589;

inline constexpr double ci_2pi = -0.02256066174634606764353878;
inline constexpr double si_2pi = -0.1526447506622681689855415;
inline constexpr double ci_pi = 0.07366791204642548599010097;
inline constexpr double si_pi = 0.2811407251875695511297317;
inline constexpr double ci_1 = 0.3374039229009681346626462;
inline constexpr double si_1 = -0.6247132564277136042899684;
inline constexpr double ci_20pi = -0.0002529199146935864414151969;
inline constexpr double si_20pi = -0.01590745575015187234986749;
inline constexpr double ci_12 = -0.04978000688411367559592121;
inline constexpr double si_12 = -0.06582508526852324870417316;
inline constexpr double ci_12p5 = -0.01140834959514161948406337;
inline constexpr double si_12p5 = -0.07845927450839658489109987;

inline constexpr double stieltjes1_half = -1.353459680804941517708687;
inline constexpr double stieltjes1_third = -3.259557515917910195250875;
inline constexpr double stieltjes1_two_thirds = -0.598906284285989292567876;
inline constexpr double stieltjes1_quarter = -5.518076350199403752694011;
inline constexpr double stieltjes1_three_quarters = -0.3912989024045497742398742;

inline constexpr double log_barnes_3_halves = 0.06693188843500470427402869;
inline constexpr double log_barnes_half = -0.505433054489695382797685;
inline constexpr double log_barnes_7_halves = 0.2308325212726786415610049;

// sum_{k>=2} (-1)^k zeta(k) / (k+1).
inline constexpr double alternating_zeta_over_kp1 = 0.3696692992460936885229263;

// Coefficients of 1/log(1+x) - 1/x scaled by n!: b_n = c_n * n!.
inline constexpr double cauchy_b2 = -0.1666666666666666666666667;
inline constexpr double cauchy_b3 = 0.25;
inline constexpr double cauchy_b4 = -0.6333333333333333333333333;
inline constexpr double cauchy_b5 = 2.25;
inline constexpr double cauchy_b6 = -10.27380952380952380952381;
inline constexpr double cauchy_b7 = 57.29166666666666666666667;
inline constexpr double cauchy_b8 = -377.2555555555555555555556;

} // namespace ref
