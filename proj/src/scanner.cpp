#include "hit/scanner.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <sstream>
#include <thread>

#include "hit/error.hpp"

namespace hit {

namespace {

struct Chunk {
    std::vector<long> reducible, undefined;
    std::map<long, Factorization> factorizations;
};

}  // namespace

bool ScanReport::is_reducible_at(long t) const {
    return std::binary_search(reducible_points.begin(), reducible_points.end(), t);
}

std::string ScanReport::table() const {
    std::ostringstream os;
    os << "f = " << f.to_string() << ", |t| <= " << bound << '\n';
    os << std::setw(12) << "t" << "  factorization of f(t, X)\n";
    for (long t : reducible_points) os << std::setw(12) << t << "  " << factorizations.at(t).to_string() << '\n';
    os << reducible_points.size() << " reducible, " << undefined_points.size() << " undefined";
    if (verdict) os << ", verdict " << to_string(*verdict);
    os << '\n';
    return os.str();
}

Factorization specialize_and_factor(const RationalBivarPoly& f, long t) {
    return factor_Q(f.evaluate_t(mpq_class(t)));
}

ScanReport scan(const RationalBivarPoly& f, long bound, unsigned threads) {
    if (f.is_zero()) throw InputError("cannot scan the zero polynomial");
    const int n = f.degree_X();
    if (n < 2) throw InputError("scan needs degree at least 2 in X");
    if (bound < 0) throw InputError("scan bound must be non-negative");
    const RationalUniPoly lead = f.coeff_X(n);

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    const long count = 2 * bound + 1;
    threads = static_cast<unsigned>(std::min<long>(threads, count));
    std::vector<std::future<Chunk>> parts;
    for (unsigned k = 0; k < threads; ++k)
        parts.push_back(std::async(std::launch::async, [&, k] {
            Chunk c;
            for (long i = k; i < count; i += threads) {
                const long t = i - bound;
                if (sgn(lead.eval(mpq_class(t))) == 0) {
                    c.undefined.push_back(t);
                    continue;
                }
                Factorization fac = specialize_and_factor(f, t);
                if (fac.reducible()) {
                    c.reducible.push_back(t);
                    c.factorizations.emplace(t, std::move(fac));
                }
            }
            return c;
        }));
    ScanReport r;
    r.f = f;
    r.bound = bound;
    for (auto& p : parts) {
        Chunk c = p.get();
        r.reducible_points.insert(r.reducible_points.end(), c.reducible.begin(), c.reducible.end());
        r.undefined_points.insert(r.undefined_points.end(), c.undefined.begin(), c.undefined.end());
        r.factorizations.merge(c.factorizations);
    }
    std::sort(r.reducible_points.begin(), r.reducible_points.end());
    std::sort(r.undefined_points.begin(), r.undefined_points.end());
    return r;
}

Reconciliation reconcile(const ScanReport& report, const Verdict& v, std::size_t known_exceptions) {
    Reconciliation out;
    const long half = report.bound / 2;
    for (long t : report.reducible_points) ++(std::labs(t) <= half ? out.small_count : out.new_count);
    out.threshold = std::max<std::size_t>(known_exceptions, 4);
    std::ostringstream os;
    os << out.small_count << " reducible points with |t| <= " << half << ", " << out.new_count << " more up to "
       << report.bound;
    out.notes.push_back(os.str());
    switch (v.status) {
        case VerdictStatus::Finite:
            if (out.new_count > out.threshold) {
                out.contradiction = true;
                out.notes.push_back("Finite verdict, but the reducible set keeps growing (" +
                                    std::to_string(out.new_count) + " new points > threshold " +
                                    std::to_string(out.threshold) + ")");
            } else {
                out.notes.push_back("consistent with the Finite verdict");
            }
            break;
        case VerdictStatus::InfiniteWitness:
            out.notes.push_back(report.reducible_points.empty()
                                    ? "no reducible point in range; the infinite family may be sparse"
                                    : "consistent with the infinite family");
            break;
        case VerdictStatus::Inconclusive:
            out.notes.push_back("verdict inconclusive; the scan is informational only");
            break;
    }
    return out;
}

}  // namespace hit
