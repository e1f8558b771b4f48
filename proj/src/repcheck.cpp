/*
 * Copyright 2026 The qalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "qalg/repcheck.hpp"
#include "qalg/errors.hpp"
#include <cmath>

namespace qalg {
namespace {

using Mat = Eigen::MatrixXd;

double rel(const Mat& residual, std::initializer_list<double> scales) {
    double s = 0.0;
    for(double x : scales) s = std::max(s, std::fabs(x));
    const double r = max_abs(residual);
    return s > 0.0 ? r / s : r;
}

} // namespace

LadderMatrices build_ladder(const Representation& rep) {
    const int n = rep.p + 1;
    LadderMatrices l{Mat::Zero(n, n), Mat::Zero(n, n), Mat::Zero(n, n)};
    for(int k = 0; k < n; ++k) l.N(k, k) = k;
    for(int k = 1; k <= rep.p; ++k) {
        const double f = rep.phi_values.at(k);
        if(!(f >= 0.0)) throw DomainError("non-unitary: negative structure function");
        l.bdag(k, k - 1) = std::sqrt(f);
    }
    l.b = l.bdag.transpose();
    return l;
}

double ladder_residual(const LadderMatrices& l, const std::vector<double>& phi) {
    const auto n = l.N.rows();
    Mat lower    = Mat::Zero(n, n);
    Mat upper    = Mat::Zero(n, n);
    double scale = 0.0;
    for(Eigen::Index k = 1; k < n; ++k) {
        lower(k, k)     = phi.at(k);
        upper(k - 1, k - 1) = phi.at(k);
        scale = std::max(scale, std::fabs(phi.at(k)));
    }
    const Mat r1 = l.N * l.bdag - l.bdag * l.N - l.bdag;
    const Mat r2 = l.N * l.b - l.b * l.N + l.b;
    const Mat r3 = l.bdag * l.b - lower;
    const Mat r4 = l.b * l.bdag - upper;
    const double s  = scale > 0.0 ? scale : 1.0;
    const double bs = max_abs(l.bdag) > 0.0 ? max_abs(l.bdag) : 1.0;
    return std::max({max_abs(r1) / bs, max_abs(r2) / bs, max_abs(r3) / s, max_abs(r4) / s});
}

RealizationMatrices fit_realization(const Representation& rep,
                                    ConstantsVariant variant, double fit_tol) {
    const auto sc  = structure_constants(rep.system, rep.charges, variant);
    const auto fam = root_family(rep.system, rep.charges, rep.index_reading);
    const int n    = rep.p + 1;
    const double g = sc.gamma;
    const double u = rep.u;

    std::vector<double> A(n), bd(n, 0.0), t2(n + 1, 0.0);
    std::vector<bool> special(n, false);
    double amax = 0.0;
    for(int k = 0; k < n; ++k) {
        const double y = k + u;
        A[k]           = 0.5 * g * (y * y - 0.25);
        amax           = std::max(amax, std::fabs(A[k]));
    }
    for(int k = 0; k < n; ++k) {
        if(std::fabs(A[k]) > 1e-12 * (1.0 + amax)) {
            bd[k] = -sc.zeta / (2.0 * g * A[k]);
        } else if(sc.zeta != 0.0) {
            throw DomainError("singular diagonal fit: resonant shift u");
        } else {
            special[k] = true;
        }
    }
    auto F = [&](int k) {
        return sc.a * A[k] * A[k] - g * bd[k] * bd[k] + sc.d * A[k] + sc.z;
    };
    const double g8 = std::pow(g, 8);
    for(int k = 1; k < n; ++k) {
        const double y   = k + u;
        const double den = 3.0 * 4096.0 * g8 * (y - 1.0) * y * (2.0 * y - 1.0) * (2.0 * y - 1.0);
        if(std::fabs(den) > 1e-12 * g8) {
            t2[k] = fam.phi(rep.E, y) / den;
        } else {
            if(special[k - 1])
                throw ResidualError("ansatz failure", INFINITY);
            const double yp = y - 1.0;
            t2[k] = (F(k - 1) + 2.0 * g * (yp - 1.0) * t2[k - 1]) / (2.0 * g * (yp + 1.0));
        }
        if(t2[k] < 0.0) {
            if(t2[k] < -1e-12 * (1.0 + std::fabs(t2[k]))) throw ResidualError("ansatz failure", -t2[k]);
            t2[k] = 0.0;
        }
    }
    for(int k = 0; k < n; ++k) {
        if(!special[k]) continue;
        const double y  = k + u;
        const double b2 = (sc.z - 2.0 * g * (y + 1.0) * t2[k + 1] +
                           2.0 * g * (y - 1.0) * t2[k]) / g;
        if(b2 < -1e-9 * (1.0 + std::fabs(sc.z / g))) throw ResidualError("ansatz failure", -b2);
        bd[k] = std::sqrt(std::max(b2, 0.0));
    }

    RealizationMatrices m;
    m.dim       = n;
    const auto l = build_ladder(rep);
    m.N         = l.N;
    m.b         = l.b;
    m.bdag      = l.bdag;
    m.A         = Mat::Zero(n, n);
    m.B         = Mat::Zero(n, n);
    for(int k = 0; k < n; ++k) {
        m.A(k, k) = A[k];
        m.B(k, k) = bd[k];
    }
    for(int k = 1; k < n; ++k) {
        const double t = std::sqrt(t2[k]);
        m.B(k - 1, k)  = t;
        m.B(k, k - 1)  = t;
    }
    m.C = m.A * m.B - m.B * m.A;
    const double res = verify_algebra(m, sc).max();
    if(!(res <= fit_tol)) throw ResidualError("ansatz failure", res);
    return m;
}

AlgebraResidual verify_algebra(const RealizationMatrices& mats,
                               const StructureConstants& sc) {
    const auto n  = mats.A.rows();
    const Mat I   = Mat::Identity(n, n);
    const Mat& A  = mats.A;
    const Mat& B  = mats.B;
    const Mat& C  = mats.C;
    const Mat AB  = A * B, BA = B * A, AC = A * C, CA = C * A;
    const Mat BC  = B * C, CB = C * B, A2 = A * A, B2 = B * B;
    const Mat ABs = AB + BA;

    AlgebraResidual r;
    r.ab = rel(AB - BA - C, {max_abs(AB), max_abs(BA), max_abs(C)});

    const Mat rac = sc.beta * A2 + sc.gamma * ABs + sc.delta * A + sc.epsilon * B + sc.zeta * I;
    r.ac = rel(AC - CA - rac,
               {max_abs(AC), max_abs(CA), sc.beta * max_abs(A2), sc.gamma * max_abs(ABs),
                sc.delta * max_abs(A), sc.epsilon * max_abs(B), sc.zeta});

    const Mat rbc = sc.a * A2 - sc.gamma * B2 - sc.beta * ABs + sc.d * A - sc.delta * B + sc.z * I;
    r.bc = rel(BC - CB - rbc,
               {max_abs(BC), max_abs(CB), sc.a * max_abs(A2), sc.gamma * max_abs(B2),
                sc.beta * max_abs(ABs), sc.d * max_abs(A), sc.delta * max_abs(B), sc.z});
    return r;
}

AlgebraResidual verify_algebra(SystemId id, const RealizationMatrices& mats,
                               const CentralCharges& charges, ConstantsVariant variant) {
    return verify_algebra(mats, structure_constants(id, charges, variant));
}

CasimirReport verify_casimir(const RealizationMatrices& mats,
                             const StructureConstants& sc, const CasimirValue& closed,
                             const std::string& tag) {
    CasimirReport r;
    const Mat K    = casimir_operator(mats.A, mats.B, mats.C, sc);
    r.matrix_value = K.rows() ? K.diagonal().mean() : 0.0;
    r.spread       = casimir_spread(K);
    r.closed_value = closed.value;
    r.central      = r.spread <= 1e-8 * (1.0 + std::fabs(r.matrix_value));
    r.relative_deviation =
      std::fabs(r.matrix_value - r.closed_value) / (1.0 + std::fabs(r.closed_value));
    if(r.relative_deviation > 1e-8)
        r.discrepancy = DiscrepancyRecord{tag, "K", r.closed_value, r.matrix_value,
                                          r.relative_deviation,
                                          "closed-form Casimir differs from the matrix "
                                          "value on the fitted realization"};
    return r;
}

} // namespace qalg
