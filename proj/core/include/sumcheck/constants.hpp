#pragma once

// Mathematical constants shared across the library. Values carry more digits
// than a double can hold so the rounded constant is correctly rounded.

namespace sumcheck {

inline constexpr double pi        = 3.14159265358979323846264338327950288;
inline constexpr double euler     = 0.57721566490153286060651209008240243;  // gamma
inline constexpr double stieltjes1 = -0.07281584548367672486058637587490131; // gamma_1
inline constexpr double stieltjes2 = -0.00969036319287231848453038990710340; // gamma_2
inline constexpr double zeta2     = 1.64493406684822643647241516664602519;  // pi^2/6
inline constexpr double zeta3     = 1.20205690315959428539973816151144999;
inline constexpr double zeta4     = 1.08232323371113819151600369654116790;  // pi^4/90
inline constexpr double log_2pi   = 1.83787706640934548356065947281123527;
inline constexpr double ln2       = 0.69314718055994530941723212145817657;

} // namespace sumcheck
