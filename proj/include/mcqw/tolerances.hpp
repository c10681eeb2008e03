#pragma once

namespace mcqw {

// Numerical thresholds shared by the library, the tests and the CLI.
struct Tolerances {
    // TransitionMatrix: |row sum - 1|
    double row_sum = 1e-12;
    // symmetric_eig precondition ||M - M^T||_max
    double symmetry = 1e-12;
    // Jacobi stop: off-diagonal Frobenius norm, relative to max(1, ||M||_F)
    double jacobi_offdiag = 1e-12;
    int jacobi_max_sweeps = 100;
    // Gaussian elimination rank decision for the stationary solve
    double rank = 1e-10;
    // D eigenvalues with |lambda -+ 1| below this take the +-1 branches
    double unit_eigenvalue = 1e-10;
    // U eigenvalues closer than this (complex distance) are treated as equal
    double eigenvalue_grouping = 1e-8;
    // residual of alpha0 outside the spectral basis span
    double subspace_membership = 1e-9;
    // lemma identity checks
    double lemma = 1e-9;
    // initial line state |a|^2 + |b|^2 + |g|^2
    double line_normalization = 1e-12;
    // 1 - cos k guard for the momentum-space eigenvectors
    double singular_k = 1e-12;
    // 2 - cos^2 k - cos k guard for the group velocity
    double singular_velocity = 1e-14;
    // adaptive Simpson local tolerance and depth limit
    double quadrature_local = 1e-8;
    int quadrature_max_depth = 40;
    // detailed balance |pi_j p_jk - pi_k p_kj|
    double detailed_balance = 1e-10;
};

}  // namespace mcqw
