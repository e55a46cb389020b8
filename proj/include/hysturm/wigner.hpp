#pragma once

namespace hysturm {

/// Wigner 3j symbol (j1 j2 j3; m1 m2 m3) by the Racah sum. Arguments may be
/// half-integer; values violating the triangle or projection rules give 0.
/// Non-half-integer arguments throw std::invalid_argument.
double wigner3j(double j1, double j2, double j3, double m1, double m2,
                double m3);

/// Wigner 6j symbol {j1 j2 j3; j4 j5 j6}, same conventions as wigner3j.
double wigner6j(double j1, double j2, double j3, double j4, double j5,
                double j6);

/// Clebsch-Gordan coefficient <l1 m1 l2 m2 | L M> (Condon-Shortley).
double clebsch_gordan(double l1, double m1, double l2, double m2, double L,
                      double M);

}  // namespace hysturm
