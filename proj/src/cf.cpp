#include "hermanlab/cf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace hermanlab::cf {

namespace {

constexpr std::int64_t kOverflowGuard = std::int64_t(1) << 62;

// Denominators beyond this exhaust long double significance for l_n.
constexpr std::int64_t kDenominatorHorizon = 2'000'000'000;

long double value_from_quotients(const Quotients& head, const Quotients& cycle) {
    // Expand until the convergent denominator saturates long double
    // significance, then evaluate the tail-free fraction backwards.
    std::vector<std::int64_t> terms;
    __int128 pm1 = 1, pm2 = 0, qm1 = 0, qm2 = 1;  // p_{-1}, p_0, q_{-1}, q_0
    std::size_t i = 0;
    while (true) {
        std::int64_t a;
        if (i < head.size()) {
            a = head[i];
        } else if (!cycle.empty()) {
            a = cycle[(i - head.size()) % cycle.size()];
        } else {
            break;
        }
        __int128 p = (__int128)a * pm1 + pm2;
        __int128 q = (__int128)a * qm1 + qm2;
        if (q > (__int128)4 * kOverflowGuard) break;
        terms.push_back(a);
        pm2 = pm1; pm1 = p;
        qm2 = qm1; qm1 = q;
        ++i;
        if (q > kOverflowGuard) break;
    }
    if (terms.empty()) throw Error("empty_quotients", "no partial quotients given");
    long double x = 0.0L;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it)
        x = 1.0L / ((long double)*it + x);
    return x;
}

}  // namespace

ContinuedFraction ContinuedFraction::from_quotients(Quotients head, Quotients cycle) {
    if (head.empty() && cycle.empty())
        throw Error("empty_quotients", "no partial quotients given");
    for (auto a : head)
        if (a < 1) throw Error("bad_quotient", "partial quotients must be >= 1");
    for (auto a : cycle)
        if (a < 1) throw Error("bad_quotient", "partial quotients must be >= 1");
    ContinuedFraction cf;
    cf.head_ = std::move(head);
    cf.cycle_ = std::move(cycle);
    cf.value_ = value_from_quotients(cf.head_, cf.cycle_);
    return cf;
}

ContinuedFraction ContinuedFraction::parse(std::string_view text) {
    auto parse_list = [](std::string_view s) {
        Quotients out;
        std::string buf(s);
        std::istringstream in(buf);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            if (tok.empty()) throw Error("bad_theta_string", "empty quotient in list");
            std::size_t pos = 0;
            long long v = std::stoll(tok, &pos);
            if (pos != tok.size())
                throw Error("bad_theta_string", "invalid quotient '" + tok + "'");
            out.push_back(v);
        }
        return out;
    };
    auto open = text.find('(');
    Quotients head, cycle;
    if (open == std::string_view::npos) {
        head = parse_list(text);
    } else {
        auto close = text.find(')', open);
        if (close == std::string_view::npos || close + 1 != text.size())
            throw Error("bad_theta_string", "unbalanced parentheses in quotient list");
        if (open > 0) head = parse_list(text.substr(0, open));
        cycle = parse_list(text.substr(open + 1, close - open - 1));
        if (cycle.empty())
            throw Error("bad_theta_string", "empty periodic part");
    }
    return from_quotients(std::move(head), std::move(cycle));
}

std::string ContinuedFraction::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < head_.size(); ++i) {
        if (i) out << ',';
        out << head_[i];
    }
    if (!cycle_.empty()) {
        out << '(';
        for (std::size_t i = 0; i < cycle_.size(); ++i) {
            if (i) out << ',';
            out << cycle_[i];
        }
        out << ')';
    }
    return out.str();
}

std::int64_t ContinuedFraction::quotient(std::size_t i) const {
    if (i == 0) throw Error("bad_depth", "quotient index is 1-based");
    if (i <= head_.size()) return head_[i - 1];
    if (cycle_.empty())
        throw Error("bad_depth", "quotient index exceeds stored depth");
    return cycle_[(i - head_.size() - 1) % cycle_.size()];
}

std::size_t ContinuedFraction::max_depth() const {
    if (cycle_.empty()) return head_.size();
    // Walk the recurrence until the denominator would overflow int64.
    std::int64_t qm1 = 0, qm2 = 1;
    std::size_t n = 0;
    while (true) {
        std::int64_t a = quotient(n + 1);
        __int128 q = (__int128)a * qm1 + qm2;
        if (q > kOverflowGuard) return n;
        qm2 = qm1;
        qm1 = (std::int64_t)q;
        ++n;
    }
}

std::int64_t ContinuedFraction::bound() const {
    std::int64_t b = 0;
    for (auto a : head_) b = std::max(b, a);
    for (auto a : cycle_) b = std::max(b, a);
    return b;
}

ExpandResult cf_expand(long double theta, int depth) {
    if (!(theta > 0.0L && theta < 1.0L))
        throw Error("bad_theta", "theta must lie in (0,1)");
    if (depth < 1) throw Error("bad_depth", "depth must be >= 1");

    ExpandResult res;
    Quotients quots;
    long double x = theta;
    std::int64_t pm1 = 1, pm2 = 0, qm1 = 0, qm2 = 1;
    const long double eps = std::numeric_limits<long double>::epsilon();
    for (int n = 1; n <= depth; ++n) {
        long double inv = 1.0L / x;
        long double af = std::floor(inv);
        long double rem = inv - af;
        if (af >= 1e15L) {
            // Remainder at roundoff scale: the input is rational (or the
            // precision is spent) at this depth.
            res.precision_exhausted = true;
            break;
        }
        std::int64_t a = (std::int64_t)af;
        if (rem <= 8 * eps * inv) {
            std::ostringstream msg;
            __int128 p = (__int128)a * pm1 + pm2;
            __int128 q = (__int128)a * qm1 + qm2;
            msg << "input is rational: theta = " << (long long)p << "/" << (long long)q;
            throw Error("rational_detected", msg.str());
        }
        quots.push_back(a);
        __int128 p = (__int128)a * pm1 + pm2;
        __int128 q = (__int128)a * qm1 + qm2;
        pm2 = pm1; pm1 = (std::int64_t)p;
        qm2 = qm1; qm1 = (std::int64_t)q;
        x = rem;
        if ((__int128)qm1 * qm1 > (__int128)(1.0L / eps)) {
            res.precision_exhausted = true;
            if (n < depth) break;
        }
    }
    if (quots.empty())
        throw Error("rational_detected", "input indistinguishable from a rational");
    res.cf = ContinuedFraction::from_quotients(std::move(quots));
    return res;
}

ConvergentTable convergents(const ContinuedFraction& cf, int depth) {
    if (depth < 0) throw Error("bad_depth", "depth must be >= 0");
    if ((std::size_t)depth > cf.max_depth())
        throw Error("bad_depth", "depth exceeds stored quotient count");

    ConvergentTable table;
    table.theta = cf.value();
    table.rows.reserve(depth + 1);
    std::int64_t pm1 = 1, pm2 = 0, qm1 = 0, qm2 = 1;  // p_{-1}, p_{-2}... seeds
    // Row 0 is the seed (p_0, q_0) = (0, 1).
    std::int64_t p = 0, q = 1;
    for (int n = 0; n <= depth; ++n) {
        if (n > 0) {
            std::int64_t a = cf.quotient(n);
            __int128 pp = (__int128)a * pm1 + pm2;
            __int128 qq = (__int128)a * qm1 + qm2;
            if (qq > kOverflowGuard)
                throw Error("depth_overflow", "convergent denominator overflows int64");
            p = (std::int64_t)pp;
            q = (std::int64_t)qq;
        }
        ConvergentRow row;
        row.p = p;
        row.q = q;
        row.l = std::fabs((long double)p - (long double)q * table.theta);
        table.rows.push_back(row);
        pm2 = pm1; pm1 = p;
        qm2 = qm1; qm1 = q;
        if (n == 0) { pm2 = 1; qm2 = 0; }  // restore p_{-1} = 1, q_{-1} = 0
    }
    return table;
}

BoundedTypeReport bounded_type_check(const ConvergentTable& table,
                                     double c_lower, double c_upper) {
    BoundedTypeReport rep;
    if (table.rows.size() < 2) {
        rep.note = "insufficient depth";
        return rep;
    }
    rep.sufficient_depth = true;
    rep.min_ratio = std::numeric_limits<long double>::max();
    rep.max_ratio = 0;
    for (std::size_t n = 0; n + 1 < table.rows.size(); ++n) {
        long double r = table.rows[n].l / table.rows[n + 1].l;
        rep.min_ratio = std::min(rep.min_ratio, r);
        rep.max_ratio = std::max(rep.max_ratio, r);
    }
    rep.ok = rep.min_ratio >= (long double)c_lower && rep.max_ratio <= (long double)c_upper;
    if (!rep.ok) rep.note = "ratio outside requested band";
    return rep;
}

std::vector<std::size_t> circle_order(long double theta, std::size_t count) {
    if (count < 1) throw Error("bad_count", "count must be >= 1");
    std::vector<long double> angle(count);
    long double x = 0;
    for (std::size_t i = 0; i < count; ++i) {
        angle[i] = x;
        x += theta;
        x -= std::floor(x);
    }
    std::vector<std::size_t> perm(count);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t a, std::size_t b) { return angle[a] < angle[b]; });
    for (std::size_t k = 0; k + 1 < count; ++k) {
        if (angle[perm[k + 1]] - angle[perm[k]] < 1e-15L)
            throw Error("rational_input",
                        "coincident angles: theta behaves rationally at this count");
    }
    return perm;
}

}  // namespace hermanlab::cf
