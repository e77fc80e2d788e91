#pragma once

// Reference decimals computed independently at 40 significant digits
// (mpmath), rounded to 20. Used as oracles for the binary64 and extended code.

namespace ref {

inline constexpr double s1 = 1.9021130325903071442;
inline constexpr double s2 = 1.1755705045849462583;
inline constexpr double c1 = 0.6180339887498948482;
inline constexpr double c2 = -1.6180339887498948482;
inline constexpr double xi0 = 5.1381810100900968406;
inline constexpr double xi1 = 2.1755705045849462583;

inline constexpr double lambda[5] = {0.0, 3.5542542696277330188, 3.3478587629625741254,
                                     0.27017522578732072282, 2.8277117416223721329};
inline constexpr double eta = 0.74162927049575262258;
inline constexpr double phi_rad = 0.7353004075380348713;
inline constexpr double phi_deg = 42.129610026178819721;

inline constexpr double f0_raw_norm = 6.1536264213299854159;
inline constexpr double f0[5] = {0.83498422853228389419, 0.35354283078411826136,
                                 0.16250580251894291182, 0.16250580251894291182,
                                 0.35354283078411826136};
inline constexpr double f2[5] = {-0.52573111211913360603, 0.42532540417601996609,
                                 0.42532540417601996609, 0.42532540417601996609,
                                 0.42532540417601996609};

inline constexpr double d[5] = {1.0, 1.977316119636452925, 5.1165199130231700306,
                                3.7610787607113920427, 8.9442719099991587856};

inline constexpr double dft11_re = 0.13819660112501051518;
inline constexpr double dft11_im = 0.42532540417601996609;
inline constexpr double eps1_2_re = -0.36180339887498948482;
inline constexpr double eps1_2_im = 0.26286555605956680301;
inline constexpr double inv_sqrt5 = 0.44721359549995793928;
inline constexpr double inv_s2 = 0.85065080835203993218;
inline constexpr double sqrt_lambda3 = 0.51978382601550880001;
inline constexpr double sqrt_lambda2 = 1.8297154868893070954;
inline constexpr double power_prefactor_n2 = 0.39089069015628456341;

// Same constants as decimal strings, for comparisons at 30+ digits.
inline constexpr const char* lambda1_40 = "3.554254269627733018845439961557490315948";
inline constexpr const char* eta_40 = "0.7416292704957526225753968687718613950466";

}  // namespace ref
