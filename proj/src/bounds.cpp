#include "schwinger/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace schwinger {

namespace {

constexpr double kPi = std::numbers::pi;

// Everything below is exact moment algebra: with a = <UV>, b = <UV^dag>,
// the remaining products follow from <U^dag V> = w conj(b) and
// <U^dag V^dag> = conj(w) conj(a), so each half-anticommutator mean of the
// trig quartet is a linear combination of (1+w)a and (1+conj(w))b.
struct MomentAlgebra {
    double v_u, v_v, f3;
    double h;                       // |a|^2 + |b|^2
    double mc_u, ms_u, mc_v, ms_v;  // <C_U>, <S_U>, <C_V>, <S_V>
    double m_cc, m_cs, m_sc, m_ss;  // <{A,B}/2> for the four quartet pairs
    double c_cc, c_cs, c_sc, c_ss;  // covariances
    double f, f1, f2;

    MomentAlgebra(const SchwingerPair& pair, const PairMoments& m) {
        const cplx w = pair.omega;
        v_u = std::clamp(1.0 - std::norm(m.u), 0.0, 1.0);
        v_v = std::clamp(1.0 - std::norm(m.v), 0.0, 1.0);
        f3 = (1.0 - v_u) * (1.0 - v_v);
        h = std::norm(m.uv) + std::norm(m.uvd);
        mc_u = m.u.real();
        ms_u = m.u.imag();
        mc_v = m.v.real();
        ms_v = m.v.imag();
        const cplx oa = (1.0 + w) * m.uv;
        const cplx ob = (1.0 + std::conj(w)) * m.uvd;
        m_cc = 0.25 * (oa.real() + ob.real());
        m_cs = 0.25 * (oa.imag() - ob.imag());
        m_sc = 0.25 * (oa.imag() + ob.imag());
        m_ss = 0.25 * (ob.real() - oa.real());
        c_cc = m_cc - mc_u * mc_v;
        c_cs = m_cs - mc_u * ms_v;
        c_sc = m_sc - ms_u * mc_v;
        c_ss = m_ss - ms_u * ms_v;
        f = c_cc * c_cc + c_cs * c_cs + c_sc * c_sc + c_ss * c_ss;
        f1 = m_cc * m_cc + m_cs * m_cs + m_sc * m_sc + m_ss * m_ss; // = 1/4 sum <{A,B}>^2
        f2 = 0.5 * ((std::conj(m.u * m.v) * oa).real() + (std::conj(m.u * std::conj(m.v)) * ob).real());
    }

    // C(C_dU, C_dV) via the F3-weighted expansion (exact for admissible states)
    double dressed_x() const {
        return (c_cc * mc_u * mc_v + c_ss * ms_u * ms_v + c_cs * mc_u * ms_v + c_sc * ms_u * mc_v) / f3;
    }
};

double one_plus_g(int n, double x) {
    if (n == 2) {
        // {U,V} = 0 at N = 2 forces x = -1 identically; the sec^2(pi/2)(1+x)^2
        // term vanishes in the limit and csc^2(pi/2) = 1 remains.
        return x * x;
    }
    const double sp = std::sin(kPi / n);
    const double cp = std::cos(kPi / n);
    return (1.0 + x) * (1.0 + x) / (cp * cp) + x * x / (sp * sp);
}

} // namespace

BoundReport bound_report(const SchwingerPair& pair, const PairMoments& m) {
    const int n = pair.n;
    const MomentAlgebra al(pair, m);
    BoundReport r;
    r.n = n;
    r.v_u = al.v_u;
    r.v_v = al.v_v;
    r.f = al.f;
    r.h = al.h;
    r.f1 = al.f1;
    r.f2 = al.f2;
    r.f3 = al.f3;
    const double sp2 = std::sin(kPi / n) * std::sin(kPi / n);
    r.slack13 = al.v_u * al.v_v - al.f - sp2 * 0.5 * al.h;
    r.r4 = 1.0 + std::sin(2.0 * kPi / n);
    r.admissible = std::abs(m.u) > kMeanCutoff && std::abs(m.v) > kMeanCutoff;
    if (r.admissible) {
        r.v_du = al.v_u / (1.0 - al.v_u);
        r.v_dv = al.v_v / (1.0 - al.v_v);
        r.s_du = r.v_du / pair.epsilon;
        r.s_dv = r.v_dv / pair.epsilon;
        r.product = r.s_du * r.s_dv;
        r.x = al.dressed_x();
        const double og = one_plus_g(n, r.x);
        r.g = og - 1.0;
        const double args[3] = {og, al.f / (al.f3 * sp2), 0.5 * al.h / al.f3};
        r.r2 = r.r4 * (args[1] + args[2]);
        int k = 0;
        for (int i = 1; i < 3; ++i)
            if (args[i] > args[k]) k = i;
        r.r3_argmax = k;
        r.r3 = r.r4 * args[k];
    }
    return r;
}

BoundReport bound_report(const SchwingerPair& pair, const DensityMatrix& rho) {
    return bound_report(pair, pair_moments(pair, rho));
}

MassarSpindelResult massar_spindel_check(const SchwingerPair& pair, const DensityMatrix& rho) {
    const PairMoments m = pair_moments(pair, rho);
    const double v_u = std::clamp(1.0 - std::norm(m.u), 0.0, 1.0);
    const double v_v = std::clamp(1.0 - std::norm(m.v), 0.0, 1.0);
    MassarSpindelResult r;
    if (pair.n == 2) {
        // A diverges; dividing through by A^2 leaves V_U + V_V >= 1
        r.lhs = v_u + v_v;
        r.rhs = 1.0;
    } else {
        const double a = pair.a_tan;
        r.lhs = (1.0 + 2.0 * a) * v_u * v_v;
        r.rhs = a * a * (1.0 - v_u - v_v);
    }
    r.satisfied = r.lhs >= r.rhs - 1e-9 * std::max({1.0, std::abs(r.lhs), std::abs(r.rhs)});
    if (std::abs(m.u) > kMeanCutoff && std::abs(m.v) > kMeanCutoff) {
        r.scaled_defined = true;
        const double s_du = v_u / (1.0 - v_u) / pair.epsilon;
        const double s_dv = v_v / (1.0 - v_v) / pair.epsilon;
        r.scaled_product = s_du * s_dv;
        r.scaled_satisfied = r.scaled_product >= 1.0 - 1e-9;
    }
    return r;
}

FHResult compute_F_H(const SchwingerPair& pair, const DensityMatrix& rho) {
    const PairMoments m = pair_moments(pair, rho);
    const MomentAlgebra al(pair, m);
    // second H path: twice the four-product modulus sum, via explicit matrices
    const TrigQuartet q = trig_quartet(pair);
    const CMatrix* ops[4][2] = {
        {&q.c_u, &q.c_v}, {&q.c_u, &q.s_v}, {&q.s_u, &q.c_v}, {&q.s_u, &q.s_v}};
    double four = 0.0;
    for (auto& p : ops)
        four += std::norm(trace_product(mat_mul(*p[0], *p[1]), rho.matrix()));
    const double h_dual = 2.0 * four;
    if (std::abs(h_dual - al.h) > 1e-10)
        throw ConsistencyError("compute_F_H: the two H paths disagree");
    return {al.f, al.h};
}

FDecomposition decompose_F(const SchwingerPair& pair, const DensityMatrix& rho) {
    const MomentAlgebra al(pair, pair_moments(pair, rho));
    return {al.f1, al.f2, al.f3};
}

double theorem13_check(const SchwingerPair& pair, const DensityMatrix& rho) {
    return bound_report(pair, rho).slack13;
}

double compute_R2(const SchwingerPair& pair, const DensityMatrix& rho) {
    const BoundReport r = bound_report(pair, rho);
    if (!r.admissible) throw VanishingMeanError("compute_R2: vanishing <U> or <V>");
    return r.r2;
}

R3Result compute_R3(const SchwingerPair& pair, const DensityMatrix& rho) {
    const PairMoments m = pair_moments(pair, rho);
    const BoundReport r = bound_report(pair, m);
    if (!r.admissible) throw VanishingMeanError("compute_R3: vanishing <U> or <V>");
    const MomentAlgebra al(pair, m);
    const double sp2 = std::sin(kPi / pair.n) * std::sin(kPi / pair.n);
    R3Result out;
    out.args[0] = 1.0 + r.g;
    out.args[1] = al.f / (al.f3 * sp2);
    out.args[2] = 0.5 * al.h / al.f3;
    out.argmax = r.r3_argmax;
    out.value = r.r3;
    return out;
}

double compute_R4(int n) {
    if (n < 2) throw DimensionError("compute_R4: N must be >= 2");
    return 1.0 + std::sin(2.0 * kPi / n);
}

HierarchyResult hierarchy_check(const SchwingerPair& pair, const DensityMatrix& rho, double r1) {
    const BoundReport r = bound_report(pair, rho);
    if (!r.admissible) throw VanishingMeanError("hierarchy_check: vanishing <U> or <V>");
    HierarchyResult out;
    out.product = r.product;
    out.r1 = r1;
    out.r2 = r.r2;
    out.r3 = r.r3;
    out.r4 = r.r4;
    const double slacks[5] = {
        r.product - r.r2, r.r2 - r.r3, r.r3 - r.r4, r.r4 - 1.0, r.product - r1};
    out.min_slack = *std::min_element(std::begin(slacks), std::end(slacks));
    out.chain_ok = out.min_slack >= -1e-9;
    out.r2_exceeds_r1 = r.r2 > r1;
    return out;
}

DeltaIdentityResult delta_identities_check(const SchwingerPair& pair, const DensityMatrix& rho) {
    const int n = pair.n;
    const PairMoments m = pair_moments(pair, rho);
    const MomentAlgebra al(pair, m);
    const DressedQuartet dq = dressed_quartet(pair, rho); // throws if inadmissible

    // direct dressed covariances and commutator means from matrices
    const CMatrix* dls[4][2] = {
        {&dq.c_du, &dq.c_dv}, {&dq.c_du, &dq.s_dv}, {&dq.s_du, &dq.c_dv}, {&dq.s_du, &dq.s_dv}};
    double cov_d[4];
    cplx comm_d[4];
    for (int i = 0; i < 4; ++i) {
        const cplx ab = trace_product(mat_mul(*dls[i][0], *dls[i][1]), rho.matrix());
        const cplx ba = trace_product(mat_mul(*dls[i][1], *dls[i][0]), rho.matrix());
        const double ea = trace_product(*dls[i][0], rho.matrix()).real();
        const double eb = trace_product(*dls[i][1], rho.matrix()).real();
        cov_d[i] = (0.5 * (ab + ba)).real() - ea * eb;
        comm_d[i] = ab - ba;
    }

    DeltaIdentityResult out;
    auto rel = [&out](const std::string& name, double lhs, double rhs) {
        const double r = std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
        out.residuals[name] = r;
        out.max_residual = std::max(out.max_residual, r);
    };

    // (a) F3-weighted expansions against the direct dressed covariances
    const double f3 = al.f3;
    rel("F3.C(CdU,CdV)", f3 * cov_d[0],
        al.c_cc * al.mc_u * al.mc_v + al.c_ss * al.ms_u * al.ms_v +
            al.c_cs * al.mc_u * al.ms_v + al.c_sc * al.ms_u * al.mc_v);
    rel("F3.C(CdU,SdV)", f3 * cov_d[1],
        -al.c_cc * al.mc_u * al.ms_v + al.c_ss * al.ms_u * al.mc_v +
            al.c_cs * al.mc_u * al.mc_v - al.c_sc * al.ms_u * al.ms_v);
    rel("F3.C(SdU,CdV)", f3 * cov_d[2],
        -al.c_cc * al.ms_u * al.mc_v + al.c_ss * al.mc_u * al.ms_v -
            al.c_cs * al.ms_u * al.ms_v + al.c_sc * al.mc_u * al.mc_v);
    rel("F3.C(SdU,SdV)", f3 * cov_d[3],
        al.c_cc * al.ms_u * al.ms_v + al.c_ss * al.mc_u * al.mc_v -
            al.c_cs * al.ms_u * al.mc_v - al.c_sc * al.mc_u * al.ms_v);

    // (b) F/F3 as the dressed covariance square sum
    const double ff3_dressed =
        cov_d[0] * cov_d[0] + cov_d[1] * cov_d[1] + cov_d[2] * cov_d[2] + cov_d[3] * cov_d[3];
    rel("F/F3", al.f / f3, ff3_dressed);

    // (c) delta variance product from the dressed quartet variances
    auto var_of = [&](const CMatrix& a) {
        const double m2 = trace_product(mat_mul(a, a), rho.matrix()).real();
        const double e = trace_product(a, rho.matrix()).real();
        return m2 - e * e;
    };
    const double v_du = al.v_u / (1.0 - al.v_u);
    const double v_dv = al.v_v / (1.0 - al.v_v);
    rel("Vd-product", (var_of(dq.c_du) + var_of(dq.s_du)) * (var_of(dq.c_dv) + var_of(dq.s_dv)),
        v_du * v_dv);

    // (d) (H/2)/F3 = sec^2(pi/N) [1 + 2x + F/F3]; cleared of sec^2 at N = 2
    const double x = cov_d[0];
    const double cp = std::cos(kPi / n);
    if (n == 2)
        rel("H-sec2-form", cp * cp * 0.5 * al.h / f3, 1.0 + 2.0 * x + al.f / f3);
    else
        rel("H-sec2-form", 0.5 * al.h / f3, (1.0 + 2.0 * x + al.f / f3) / (cp * cp));

    // dressed commutator relations, cleared form: cos(pi/N) <[.,.]> vs 2i sin(pi/N) C(.,.)
    const double sp = std::sin(kPi / n);
    auto relc = [&](const std::string& name, cplx lhs, cplx rhs) {
        const double r = std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
        out.residuals[name] = r;
        out.max_residual = std::max(out.max_residual, r);
    };
    relc("comm(CdU,CdV)", cp * comm_d[0], cplx(0.0, 2.0 * sp) * cov_d[3]);
    relc("comm(CdU,SdV)", cp * comm_d[1], cplx(0.0, -2.0 * sp) * cov_d[2]);
    relc("comm(SdU,CdV)", cp * comm_d[2], cplx(0.0, -2.0 * sp) * cov_d[1]);
    relc("comm(SdU,SdV)", cp * comm_d[3], cplx(0.0, 2.0 * sp) * (cov_d[0] + 1.0));
    return out;
}

Remark4Result remark4_bounds(const SchwingerPair& pair, const DensityMatrix& rho) {
    const TrigQuartet q = trig_quartet(pair);
    const CMatrix* ops[4][2] = {
        {&q.c_u, &q.c_v}, {&q.c_u, &q.s_v}, {&q.s_u, &q.c_v}, {&q.s_u, &q.s_v}};
    Remark4Result r;
    double sum = 0.0;
    cplx cc_mean{};
    for (int i = 0; i < 4; ++i) {
        const cplx t = trace_product(mat_mul(*ops[i][0], *ops[i][1]), rho.matrix());
        if (i == 0) cc_mean = t;
        r.terms[i] = std::norm(t);
        sum += r.terms[i];
    }
    r.quarter_sum = 0.25 * sum;
    r.min_term = *std::min_element(std::begin(r.terms), std::end(r.terms));
    r.max_term = *std::max_element(std::begin(r.terms), std::end(r.terms));
    r.max_holds = r.max_term >= r.quarter_sum - 1e-10;
    r.all_hold = r.min_term >= r.quarter_sum - 1e-10;

    const double mc_u = expectation(rho, q.c_u).real();
    const double ms_u = expectation(rho, q.s_u).real();
    const double mc_v = expectation(rho, q.c_v).real();
    const double ms_v = expectation(rho, q.s_v).real();
    r.phase_condition =
        mc_u > 0.0 && mc_v > 0.0 && std::abs(ms_u) < 1e-8 && std::abs(ms_v) < 1e-8;
    const double v_u = variance_unitary(rho, pair.u_op);
    const double v_v = variance_unitary(rho, pair.v_op);
    r.restricted_lhs = std::abs(cc_mean);
    r.restricted_rhs = std::sqrt((1.0 - v_u) * (1.0 - v_v)) - std::sqrt(v_u * v_v);
    r.restricted_holds = r.restricted_lhs >= r.restricted_rhs - 1e-10;
    return r;
}

} // namespace schwinger
