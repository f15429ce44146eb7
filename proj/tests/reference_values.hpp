// Generated by oracle/gen_reference.py -- do not edit by hand.
// Frozen 50-digit reference values, truncated to double precision.
#ifndef QCS_TESTS_REFERENCE_VALUES_HPP
#define QCS_TESTS_REFERENCE_VALUES_HPP

#include <complex>

namespace qcs_ref {

inline constexpr double kQFactorial10_q09 = 402794.8737101313715158;
inline constexpr std::complex<double> kQPochComplex{0.4283750000000000000000, -0.4955000000000000000000};
inline constexpr double kQPochInf_05_05 = 0.2887880950866024212789;
inline constexpr double kQPochInf_q_at_03 = 0.6126481542132565241177;
inline constexpr double kQExp_1_q05 = 3.462746619455063611538;
inline constexpr double kQExp_19_q05 = 63.99720823573140805067;
inline constexpr double kPhi32Terminating = -0.07520000000000000000000;
inline constexpr double kAsc5_q05_al03_x07 = 0.6450795124476567760580;
inline constexpr double kAsc12_q03_al01_thpi3 = 0.7018046833375542745809;
inline constexpr double kRogersSzego6_1_q05 = 13.74804687500000000000;
inline constexpr double kMeixnerPollaczek3_nu1_x05 = -1.166666666666666666667;
inline constexpr double kGProduct_x05_g07_q05 = 1.141197750343329801824;
inline constexpr double kOmega_th11_q05_al03 = 0.2074827089328290425983;
inline constexpr double kNorm_q05_al025_r2_1 = 2.795632159745324124946;
inline constexpr std::complex<double> kWavefunction_sample{1.550384030290073207445, -0.3047539104874167116309};
inline constexpr std::complex<double> kKernel_sample{1.890095200032907786976, 0.3715298223858471481926};
inline constexpr double kBesselI1_2 = 1.590636854637329063382;
inline constexpr double kBesselIhalf_1 = 0.9376748882454876467173;
inline constexpr std::complex<double> kBGWavefunction_nu1_z05_x03{1.046175425133830764174, -2.289632172418929943067e-52};

}  // namespace qcs_ref

#endif  // QCS_TESTS_REFERENCE_VALUES_HPP
