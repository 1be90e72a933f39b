#include "ssp/identities.hpp"

#include <algorithm>
#include <sstream>

#include "ssp/exact.hpp"
#include "ssp/families.hpp"

namespace ssp {

namespace {

std::string tuple_str(std::initializer_list<std::pair<const char*, long>> kv) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (const auto& [k, v] : kv) {
        if (!first) os << ',';
        os << k << '=' << v;
        first = false;
    }
    os << ')';
    return os.str();
}

class Check {
public:
    explicit Check(IdentityResult& r) : r_(r) {}

    void eq(const Int& lhs, const Int& rhs,
            std::initializer_list<std::pair<const char*, long>> kv) {
        ++r_.checked;
        if (lhs != rhs && r_.pass) {
            r_.pass = false;
            r_.first_failure = tuple_str(kv);
        }
    }

    void holds(bool ok, std::initializer_list<std::pair<const char*, long>> kv) {
        ++r_.checked;
        if (!ok && r_.pass) {
            r_.pass = false;
            r_.first_failure = tuple_str(kv);
        }
    }

private:
    IdentityResult& r_;
};

template <typename Body>
void run(std::vector<IdentityResult>& out, const char* id, bool applicable, Body body) {
    IdentityResult r;
    r.id = id;
    r.applicable = applicable;
    if (applicable) {
        Check c(r);
        body(c);
    }
    out.push_back(std::move(r));
}

void generic_identities(const SchemeId& scheme, const EigenMatrix& P,
                        std::vector<IdentityResult>& out) {
    const long d = scheme.diameter();
    const ClassicalParams cp = *family_to_classical(scheme);

    run(out, "CP-REC-FORMULA", true, [&](Check& c) {
        for (long i = 0; i <= d; ++i)
            for (long j = 0; j <= d; ++j)
                c.eq(eigen_entry(scheme, j, i, 1), P.at(i, j), {{"i", i}, {"j", j}});
    });

    run(out, "CP-LASTROW", true, [&](Check& c) {
        for (long j = 0; j <= d; ++j) {
            Int expected = gauss_binom(d, j, cp.b) * pow_int(cp.b, j * (j - 1) / 2);
            if (j % 2 == 1) expected = -expected;
            c.eq(P.at(d, j), expected, {{"j", j}});
        }
    });

    const bool self_dual = (cp.alpha == cp.b - 1);
    run(out, "CP-SELFDUAL", self_dual, [&](Check& c) {
        Int v = vertex_count(scheme);
        Int bp1 = cp.beta + 1;
        c.eq(v, pow_int(bp1, d), {{"d", d}});
        for (long i = 0; i <= d; ++i)
            for (long j = 0; j <= d; ++j)
                c.eq(P.at(i, j) * P.at(0, i), P.at(j, i) * P.at(0, j),
                     {{"i", i}, {"j", j}});
    });

    run(out, "CP-LASTCOL", self_dual, [&](Check& c) {
        for (long i = 0; i + 1 <= d; ++i) {
            Int bi = pow_int(cp.b, i);
            c.eq(P.at(i, d) * bi, P.at(i + 1, d) * (bi - (cp.beta + 1)), {{"i", i}});
        }
    });
}

void hamming_identities(const Hamming& s, const EigenMatrix& P,
                        std::vector<IdentityResult>& out) {
    const long d = s.d, q = s.q;

    run(out, "H-FORMS-AGREE", true, [&](Check& c) {
        for (long i = 0; i <= d; ++i)
            for (long j = 0; j <= d; ++j) {
                c.eq(krawtchouk(d, q, j, i, 2), P.at(i, j), {{"i", i}, {"j", j}});
                c.eq(krawtchouk(d, q, j, i, 3), P.at(i, j), {{"i", i}, {"j", j}});
            }
    });

    run(out, "H-SYM-RATIO", true, [&](Check& c) {
        for (long i = 0; i <= d; ++i)
            for (long j = 0; j <= d; ++j)
                c.eq(P.at(i, j) * binom(d, i) * pow_int(q - 1, i),
                     P.at(j, i) * binom(d, j) * pow_int(q - 1, j),
                     {{"i", i}, {"j", j}});
    });

    run(out, "H-SYM-COMPLEMENT", true, [&](Check& c) {
        for (long i = 0; i <= d; ++i)
            for (long j = 0; j <= d; ++j) {
                Int lhs = P.at(i, d - j);
                Int rhs = P.at(d - i, j);
                if ((i - j) % 2 != 0) rhs = -rhs;
                if (d - i - j >= 0)
                    rhs *= pow_int(q - 1, d - i - j);
                else
                    lhs *= pow_int(q - 1, i + j - d);
                c.eq(lhs, rhs, {{"i", i}, {"j", j}});
            }
    });

    run(out, "H-3TERM", d >= 2, [&](Check& c) {
        for (long i = 1; i <= d - 1; ++i)
            for (long j = 1; j <= d; ++j) {
                Int lhs = Int(q - 1) * (d - i) * P.at(i + 1, j)
                        - Int(i + (q - 1) * (d - i) - q * j) * P.at(i, j)
                        + Int(i) * P.at(i - 1, j);
                c.eq(lhs, 0, {{"i", i}, {"j", j}});
            }
    });

    run(out, "H-SYM-BINARY", q == 2, [&](Check& c) {
        for (long i = 0; i <= d; ++i)
            for (long j = 0; j <= d; ++j) {
                Int rhs = P.at(i, j);
                if (j % 2 == 1) rhs = -rhs;
                c.eq(P.at(d - i, j), rhs, {{"i", i}, {"j", j}});
            }
    });
}

void johnson_identities(const Johnson& s, const EigenMatrix& P,
                        std::vector<IdentityResult>& out) {
    const long n = s.n, d = s.d;

    run(out, "J-FORMS-AGREE", true, [&](Check& c) {
        for (long i = 0; i <= d; ++i)
            for (long j = 0; j <= d; ++j) {
                c.eq(eberlein(n, d, j, i, 2), P.at(i, j), {{"i", i}, {"j", j}});
                c.eq(eberlein(n, d, j, i, 3), P.at(i, j), {{"i", i}, {"j", j}});
            }
    });

    run(out, "J-KNESER-COL", true, [&](Check& c) {
        for (long i = 0; i <= d; ++i)
            c.eq(P.at(i, d), kneser_eigen(n, d, i), {{"i", i}});
    });

    run(out, "J-IND", d >= 2, [&](Check& c) {
        for (long i = 1; i <= d; ++i)
            for (long j = 1; j <= d - 1; ++j)
                c.eq(P.at(i, j),
                     eberlein(n - 2, d - 1, j, i - 1) - eberlein(n - 2, d - 1, j - 1, i - 1),
                     {{"i", i}, {"j", j}});
    });

    run(out, "J-SYM-HALF", n == 2 * d, [&](Check& c) {
        for (long i = 0; i <= d; ++i)
            for (long j = 0; j <= d; ++j) {
                Int rhs = P.at(i, j);
                if (i % 2 == 1) rhs = -rhs;
                c.eq(P.at(i, d - j), rhs, {{"i", i}, {"j", j}});
            }
    });

    run(out, "J-COINC-2D1", n == 2 * d + 1 && d % 2 == 1 && d >= 3, [&](Check& c) {
        const long j = (d + 1) / 2;
        for (long t = 1; 2 * t <= d - 1; ++t) {
            c.eq(P.at(2 * t - 1, j), P.at(2 * t, j), {{"t", t}});
            c.eq(P.at(2 * t, j), eberlein(n - 1, d, j, 2 * t - 1), {{"t", t}});
        }
    });
}

void grassmann_identities(const Grassmann& s, const EigenMatrix& P,
                          std::vector<IdentityResult>& out) {
    const long q = s.q, n = s.n, d = s.d;

    run(out, "G-FORMS-AGREE", true, [&](Check& c) {
        for (long i = 0; i <= d; ++i)
            for (long j = 0; j <= d; ++j)
                c.eq(grassmann_eigen(q, n, d, j, i, 2), P.at(i, j), {{"i", i}, {"j", j}});
    });

    run(out, "G-COL-D", true, [&](Check& c) {
        for (long i = 0; i <= d; ++i) {
            Int expected = pow_int(Int(q), d * (d - i) + i * (i - 1) / 2)
                         * gauss_binom(n - d - i, d - i, q);
            if (i % 2 == 1) expected = -expected;
            c.eq(P.at(i, d), expected, {{"i", i}});
        }
    });

    run(out, "G-IND", d >= 2, [&](Check& c) {
        for (long i = 1; i <= d; ++i)
            for (long j = 1; j <= d - 1; ++j)
                c.eq(P.at(i, j),
                     pow_int(Int(q), j) * grassmann_eigen(q, n - 2, d - 1, j, i - 1)
                         - pow_int(Int(q), j - 1) * grassmann_eigen(q, n - 2, d - 1, j - 1, i - 1),
                     {{"i", i}, {"j", j}});
    });
}

void dualpolar_identities(const DualPolar& s, const EigenMatrix& P,
                          std::vector<IdentityResult>& out) {
    const long q = s.q, d = s.d;
    const HalfInt e = s.e;

    run(out, "C-REC-RANKUP-A", d >= 2, [&](Check& c) {
        for (long i = 0; i <= d - 1; ++i)
            for (long j = 1; j <= d - 1; ++j)
                c.eq(P.at(i, j),
                     pow_halfint(q, e + HalfInt::whole(d - 1 - i))
                             * dualpolar_eigen(q, d - 1, e, j - 1, i)
                         + dualpolar_eigen(q, d - 1, e, j, i),
                     {{"i", i}, {"j", j}});
    });

    run(out, "C-REC-RANKUP-B", d >= 2, [&](Check& c) {
        for (long i = 1; i <= d; ++i)
            for (long j = 1; j <= d - 1; ++j)
                c.eq(P.at(i, j),
                     dualpolar_eigen(q, d - 1, e, j, i - 1)
                         - pow_int(Int(q), i - 1) * dualpolar_eigen(q, d - 1, e, j - 1, i - 1),
                     {{"i", i}, {"j", j}});
    });

    run(out, "C-REC-COMBINED", true, [&](Check& c) {
        for (long i = 1; i <= d; ++i)
            for (long j = 1; j <= d; ++j)
                c.eq(P.at(i - 1, j),
                     P.at(i, j) + pow_int(Int(q), i - 1) * P.at(i - 1, j - 1)
                         + pow_halfint(q, e + HalfInt::whole(d - i)) * P.at(i, j - 1),
                     {{"i", i}, {"j", j}});
    });

    run(out, "C-COL-D", true, [&](Check& c) {
        for (long i = 0; i <= d; ++i) {
            HalfInt exp = (d - i) * e + HalfInt::whole(d * (d - 1) / 2 - (d - i) * i);
            Int expected = pow_halfint(q, exp);
            if (i % 2 == 1) expected = -expected;
            c.eq(P.at(i, d), expected, {{"i", i}});
        }
    });

    run(out, "C-SYM-BIPARTITE", e == HalfInt::whole(0), [&](Check& c) {
        for (long i = 0; i <= d; ++i)
            for (long j = 0; j <= d; ++j) {
                Int rhs = P.at(i, j);
                if (j % 2 == 1) rhs = -rhs;
                c.eq(P.at(d - i, j), rhs, {{"i", i}, {"j", j}});
            }
    });

    run(out, "C-SYM-LASTCOL", e.is_integer() && e.integer() <= d, [&](Check& c) {
        const long ei = e.integer();
        for (long i = ei; i <= d; ++i) {
            c.eq(abs(P.at(i, d)), abs(P.at(d + ei - i, d)), {{"i", i}});
        }
    });
}

void bilinear_identities(const Bilinear& s, const EigenMatrix& P,
                         std::vector<IdentityResult>& out) {
    const long q = s.q, d = s.d, e = s.e;
    const Int Q(q);

    run(out, "B-DIFF-DELSARTE", d >= 2, [&](Check& c) {
        for (long i = 0; i <= d - 1; ++i)
            for (long j = 1; j <= d; ++j)
                c.eq(P.at(i, j) - P.at(i + 1, j),
                     pow_int(Q, d + e - i - 1) * bilinear_eigen(q, d - 1, e - 1, j - 1, i),
                     {{"i", i}, {"j", j}});
    });

    run(out, "B-REC-STANTON-D", d >= 2, [&](Check& c) {
        for (long i = 1; i <= d - 1; ++i)
            for (long j = 0; j <= d - 1; ++j)
                c.eq((pow_int(Q, d - j) - 1) * P.at(i, j),
                     (pow_int(Q, d) - pow_int(Q, i)) * bilinear_eigen(q, d - 1, e, j, i)
                         + (pow_int(Q, i) - 1) * bilinear_eigen(q, d - 1, e, j, i - 1),
                     {{"i", i}, {"j", j}});
    });

    run(out, "B-REC-STANTON-E", e >= d + 1, [&](Check& c) {
        for (long i = 1; i <= d; ++i)
            for (long j = 0; j <= d; ++j)
                c.eq((pow_int(Q, e - j) - 1) * P.at(i, j),
                     (pow_int(Q, e) - pow_int(Q, i)) * bilinear_eigen(q, d, e - 1, j, i)
                         + (pow_int(Q, i) - 1) * bilinear_eigen(q, d, e - 1, j, i - 1),
                     {{"i", i}, {"j", j}});
    });

    run(out, "B-REC-DUAL", true, [&](Check& c) {
        for (long i = 0; i <= d - 1; ++i)
            for (long j = 0; j <= d; ++j) {
                Int qi = pow_int(Q, i);
                Int lhs = pow_int(Q, 2 * i) * (pow_int(Q, d - i) - 1)
                        * (pow_int(Q, e - i) - 1) * P.at(i + 1, j);
                Int mid = pow_int(Q, e) * (pow_int(Q, d - j) - 1) - (pow_int(Q, d) - 1);
                if (i >= 1)
                    mid -= (qi - 1) * (pow_int(Q, e) + pow_int(Q, d) - qi
                                       - pow_int(Q, i - 1) - 1);
                Int rhs = mid * P.at(i, j);
                if (i >= 1) rhs -= pow_int(Q, i - 1) * (qi - 1) * P.at(i - 1, j);
                c.eq(lhs, rhs, {{"i", i}, {"j", j}});
            }
    });
}

void alternating_identities(const Alternating& s, const EigenMatrix& P,
                            std::vector<IdentityResult>& out) {
    const long q = s.q, n = s.n;
    const long d = n / 2;
    const long m = 2 * n - 2 * d - 1;

    run(out, "A-REC-RANKDOWN", n >= 4, [&](Check& c) {
        for (long i = 1; i <= d; ++i)
            for (long j = 1; j <= d; ++j)
                c.eq(P.at(i, j),
                     P.at(i - 1, j)
                         - pow_int(Int(q), 2 * n - 2 * i - 1)
                               * alternating_eigen(q, n - 2, j - 1, i - 1),
                     {{"i", i}, {"j", j}});
    });

    run(out, "A-LASTCOL-RATIO", true, [&](Check& c) {
        for (long i = 0; i <= d - 1; ++i)
            c.eq(P.at(i, d), -(pow_int(Int(q), m - 2 * i) - 1) * P.at(i + 1, d),
                 {{"i", i}});
    });
}

void hermitian_identities(const Hermitian& s, const EigenMatrix& P,
                          std::vector<IdentityResult>& out) {
    const long q = s.q, d = s.d;

    run(out, "Q-REC-RANKDOWN", d >= 2, [&](Check& c) {
        for (long i = 1; i <= d; ++i)
            for (long j = 1; j <= d; ++j)
                c.eq(P.at(i, j),
                     P.at(i - 1, j)
                         + pow_int(Int(-q), 2 * d - i) * hermitian_eigen(q, d - 1, j - 1, i - 1),
                     {{"i", i}, {"j", j}});
    });
}

}  // namespace

std::vector<IdentityResult> identity_suite(const SchemeId& scheme) {
    std::vector<IdentityResult> out;
    const EigenMatrix P = p_matrix_recurrence(scheme);

    generic_identities(scheme, P, out);
    switch (scheme.kind()) {
        case Family::Hamming:
            hamming_identities(*scheme.as<Hamming>(), P, out);
            break;
        case Family::Johnson:
            johnson_identities(*scheme.as<Johnson>(), P, out);
            break;
        case Family::Grassmann:
            grassmann_identities(*scheme.as<Grassmann>(), P, out);
            break;
        case Family::DualPolar:
            dualpolar_identities(*scheme.as<DualPolar>(), P, out);
            break;
        case Family::Bilinear:
            bilinear_identities(*scheme.as<Bilinear>(), P, out);
            break;
        case Family::Alternating:
            alternating_identities(*scheme.as<Alternating>(), P, out);
            break;
        case Family::Hermitian:
            hermitian_identities(*scheme.as<Hermitian>(), P, out);
            break;
    }

    std::sort(out.begin(), out.end(),
              [](const IdentityResult& a, const IdentityResult& b) { return a.id < b.id; });
    return out;
}

std::vector<std::string> identity_ids_for_family(Family family) {
    std::vector<std::string> ids = {"CP-REC-FORMULA", "CP-LASTROW", "CP-SELFDUAL",
                                    "CP-LASTCOL"};
    switch (family) {
        case Family::Hamming:
            ids.insert(ids.end(), {"H-FORMS-AGREE", "H-SYM-RATIO", "H-SYM-COMPLEMENT",
                                   "H-3TERM", "H-SYM-BINARY"});
            break;
        case Family::Johnson:
            ids.insert(ids.end(), {"J-FORMS-AGREE", "J-KNESER-COL", "J-IND",
                                   "J-SYM-HALF", "J-COINC-2D1"});
            break;
        case Family::Grassmann:
            ids.insert(ids.end(), {"G-FORMS-AGREE", "G-COL-D", "G-IND"});
            break;
        case Family::DualPolar:
            ids.insert(ids.end(), {"C-REC-RANKUP-A", "C-REC-RANKUP-B", "C-REC-COMBINED",
                                   "C-COL-D", "C-SYM-BIPARTITE", "C-SYM-LASTCOL"});
            break;
        case Family::Bilinear:
            ids.insert(ids.end(), {"B-DIFF-DELSARTE", "B-REC-STANTON-D",
                                   "B-REC-STANTON-E", "B-REC-DUAL"});
            break;
        case Family::Alternating:
            ids.insert(ids.end(), {"A-REC-RANKDOWN", "A-LASTCOL-RATIO"});
            break;
        case Family::Hermitian:
            ids.insert(ids.end(), {"Q-REC-RANKDOWN"});
            break;
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

}  // namespace ssp
