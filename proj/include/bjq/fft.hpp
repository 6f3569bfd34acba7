#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/FFT>

#include <complex>
#include <vector>

namespace bjq {

using cplx = std::complex<double>;

// Unnormalized forward transform X_k = Σ x_n e^{−2πikn/N}.
inline Eigen::VectorXcd fft(const Eigen::VectorXcd& x) {
    Eigen::FFT<double> engine;
    Eigen::VectorXcd out(x.size());
    std::vector<cplx> in(x.data(), x.data() + x.size()), res;
    engine.fwd(res, in);
    for (Eigen::Index k = 0; k < x.size(); ++k) out[k] = res[static_cast<std::size_t>(k)];
    return out;
}

// Inverse with 1/N, so ifft(fft(x)) = x.
inline Eigen::VectorXcd ifft(const Eigen::VectorXcd& x) {
    Eigen::FFT<double> engine;
    Eigen::VectorXcd out(x.size());
    std::vector<cplx> in(x.data(), x.data() + x.size()), res;
    engine.inv(res, in);
    for (Eigen::Index k = 0; k < x.size(); ++k) out[k] = res[static_cast<std::size_t>(k)];
    return out;
}

inline Eigen::MatrixXcd fft2(const Eigen::MatrixXcd& a) {
    Eigen::MatrixXcd out(a.rows(), a.cols());
    for (Eigen::Index c = 0; c < a.cols(); ++c) out.col(c) = fft(a.col(c));
    for (Eigen::Index r = 0; r < a.rows(); ++r) out.row(r) = fft(out.row(r).transpose()).transpose();
    return out;
}

inline Eigen::MatrixXcd ifft2(const Eigen::MatrixXcd& a) {
    Eigen::MatrixXcd out(a.rows(), a.cols());
    for (Eigen::Index c = 0; c < a.cols(); ++c) out.col(c) = ifft(a.col(c));
    for (Eigen::Index r = 0; r < a.rows(); ++r) out.row(r) = ifft(out.row(r).transpose()).transpose();
    return out;
}

}  // namespace bjq
