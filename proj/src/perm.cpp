#include "hit/perm.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hit/error.hpp"
#include "hit/group.hpp"

namespace hit {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    const int n = degree();
    std::vector<char> seen(img_.size(), 0);
    for (int x : img_) {
        if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)])
            throw InputError("image list is not a permutation of 0.." + std::to_string(n - 1));
        seen[static_cast<std::size_t>(x)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw InputError("permutation degree must be at least 1");
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    Permutation p;
    p.img_ = std::move(v);
    return p;
}

Permutation Permutation::unchecked(std::vector<int> images) {
    Permutation p;
    p.img_ = std::move(images);
    return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(n);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (const auto& c : cycles) {
        for (int x : c) {
            if (x < 0 || x >= n)
                throw InputError("point " + std::to_string(x) + " out of range for degree " +
                                 std::to_string(n));
            if (used[static_cast<std::size_t>(x)])
                throw InputError("point " + std::to_string(x) + " occurs in two cycles");
            used[static_cast<std::size_t>(x)] = 1;
        }
        for (std::size_t i = 0; i < c.size(); ++i)
            p.img_[static_cast<std::size_t>(c[i])] = c[(i + 1) % c.size()];
    }
    return p;
}

namespace {

std::vector<int> read_ints(std::string_view body, std::size_t offset, std::string_view text) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < body.size()) {
        char ch = body[i];
        if (ch == ' ' || ch == ',' || ch == '\t') {
            ++i;
            continue;
        }
        if (ch < '0' || ch > '9')
            throw InputError("unexpected character '" + std::string(1, ch) + "' at column " +
                             std::to_string(offset + i + 1) + " in \"" + std::string(text) + "\"");
        long long v = 0;
        while (i < body.size() && body[i] >= '0' && body[i] <= '9') {
            v = v * 10 + (body[i] - '0');
            if (v > 100000000) throw InputError("point index too large in \"" + std::string(text) + "\"");
            ++i;
        }
        out.push_back(static_cast<int>(v));
    }
    return out;
}

}  // namespace

Permutation Permutation::parse(std::string_view text, int degree) {
    std::size_t b = text.find_first_not_of(" \t\n");
    if (b == std::string_view::npos) throw InputError("empty permutation string");
    std::size_t e = text.find_last_not_of(" \t\n");
    std::string_view s = text.substr(b, e - b + 1);
    if (s.front() == '[') {
        if (s.back() != ']') throw InputError("unterminated image list \"" + std::string(text) + "\"");
        auto imgs = read_ints(s.substr(1, s.size() - 2), b + 1, text);
        if (degree > 0 && static_cast<int>(imgs.size()) != degree)
            throw InputError("image list has length " + std::to_string(imgs.size()) +
                             ", expected degree " + std::to_string(degree));
        return Permutation(std::move(imgs));
    }
    if (degree < 1) throw InputError("cycle notation needs an explicit degree");
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == ' ' || s[i] == '\t') {
            ++i;
            continue;
        }
        if (s[i] != '(')
            throw InputError("expected '(' at column " + std::to_string(b + i + 1) + " in \"" +
                             std::string(text) + "\"");
        std::size_t close = s.find(')', i);
        if (close == std::string_view::npos)
            throw InputError("unbalanced parenthesis in \"" + std::string(text) + "\"");
        auto c = read_ints(s.substr(i + 1, close - i - 1), b + i + 1, text);
        if (!c.empty()) cycles.push_back(std::move(c));
        i = close + 1;
    }
    return from_cycles(degree, cycles);
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) inv[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
    Permutation p;
    p.img_ = std::move(inv);
    return p;
}

Permutation Permutation::pow(long long e) const {
    const int n = degree();
    Permutation r = identity(n);
    if (e == 0) return r;
    const std::uint64_t ord = order();
    long long k = static_cast<long long>(static_cast<std::uint64_t>(e < 0 ? -e : e) % ord);
    if (e < 0) k = static_cast<long long>(ord) - k;
    // Walk each cycle k steps.
    for (const auto& c : cycles()) {
        const std::size_t len = c.size();
        for (std::size_t i = 0; i < len; ++i)
            r.img_[static_cast<std::size_t>(c[i])] = c[(i + static_cast<std::size_t>(k)) % len];
    }
    return r;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i)) return false;
    return true;
}

bool Permutation::is_even() const {
    return (degree() - num_cycles()) % 2 == 0;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(img_.size(), 0);
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == static_cast<int>(i)) continue;
        std::vector<int> c;
        int j = static_cast<int>(i);
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = 1;
            c.push_back(j);
            j = img_[static_cast<std::size_t>(j)];
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> out;
    std::vector<char> seen(img_.size(), 0);
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            ++len;
            j = static_cast<std::size_t>(img_[j]);
        }
        out.push_back(len);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

int Permutation::num_cycles() const {
    return static_cast<int>(cycle_type().size());
}

int Permutation::num_fixed_points() const {
    int k = 0;
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] == static_cast<int>(i)) ++k;
    return k;
}

std::uint64_t Permutation::order() const {
    std::uint64_t r = 1;
    for (int len : cycle_type()) r = std::lcm(r, static_cast<std::uint64_t>(len));
    return r;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    auto cs = cycles();
    if (cs.empty()) return "()";
    for (const auto& c : cs) {
        os << '(';
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
        os << ')';
    }
    return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw InputError("cannot compose permutations of degree " + std::to_string(p.degree()) +
                         " and " + std::to_string(q.degree()));
    std::vector<int> r(static_cast<std::size_t>(p.degree()));
    const auto& a = p.images();
    const auto& b = q.images();
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = b[static_cast<std::size_t>(a[i])];
    return Permutation::unchecked(std::move(r));
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
    if (x.degree() != g.degree()) throw InputError("degree mismatch in conjugation");
    std::vector<int> r(static_cast<std::size_t>(x.degree()));
    const auto& xi = x.images();
    const auto& gi = g.images();
    for (std::size_t i = 0; i < r.size(); ++i)
        r[static_cast<std::size_t>(gi[i])] = gi[static_cast<std::size_t>(xi[i])];
    return Permutation::unchecked(std::move(r));
}

Permutation commutator(const Permutation& a, const Permutation& b) {
    return a.inverse() * b.inverse() * a * b;
}

std::size_t hash_value(const Permutation& p) {
    std::uint64_t h = 1469598103934665603ULL;
    for (int x : p.images()) {
        h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
}

// ---------------------------------------------------------------------------

namespace {
constexpr std::uint32_t kEmpty = 0xffffffffu;
}

ElementSet::ElementSet(int degree) : degree_(degree), slots_(16, kEmpty) {}

std::size_t ElementSet::find(const Permutation& p) const {
    const std::size_t mask = slots_.size() - 1;
    std::size_t h = hash_value(p) & mask;
    while (true) {
        std::uint32_t s = slots_[h];
        if (s == kEmpty) return npos;
        if (elems_[s] == p) return s;
        h = (h + 1) & mask;
    }
}

std::size_t ElementSet::insert(const Permutation& p) {
    if (p.degree() != degree_)
        throw InputError("element of degree " + std::to_string(p.degree()) +
                         " inserted into set of degree " + std::to_string(degree_));
    if ((elems_.size() + 1) * 2 > slots_.size()) rehash(slots_.size() * 2);
    const std::size_t mask = slots_.size() - 1;
    std::size_t h = hash_value(p) & mask;
    while (true) {
        std::uint32_t s = slots_[h];
        if (s == kEmpty) break;
        if (elems_[s] == p) return s;
        h = (h + 1) & mask;
    }
    slots_[h] = static_cast<std::uint32_t>(elems_.size());
    elems_.push_back(p);
    return elems_.size() - 1;
}

void ElementSet::rehash(std::size_t buckets) {
    slots_.assign(buckets, kEmpty);
    const std::size_t mask = buckets - 1;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        std::size_t h = hash_value(elems_[i]) & mask;
        while (slots_[h] != kEmpty) h = (h + 1) & mask;
        slots_[h] = static_cast<std::uint32_t>(i);
    }
}

Limits& limits() {
    static Limits l;
    return l;
}

// Dimino's step: the enlarged group is a union of right cosets of the old
// one, closed under right multiplication by every generator.
bool extend_closure(ElementSet& group, const std::vector<Permutation>& old_gens,
                    const Permutation& new_gen, std::size_t limit) {
    if (group.contains(new_gen)) return true;
    const std::size_t base = group.size();
    std::vector<Permutation> gens = old_gens;
    gens.push_back(new_gen);
    std::vector<Permutation> reps;
    auto add_coset = [&](const Permutation& r) {
        if (group.size() + base > limit) return false;
        for (std::size_t i = 0; i < base; ++i) group.insert(group[i] * r);
        reps.push_back(r);
        return true;
    };
    if (!add_coset(new_gen)) return false;
    for (std::size_t k = 0; k < reps.size(); ++k) {
        for (const auto& g : gens) {
            Permutation e = reps[k] * g;
            if (!group.contains(e) && !add_coset(e)) return false;
        }
    }
    return true;
}

std::optional<ElementSet> closure_limited(int degree, const std::vector<Permutation>& gens,
                                          std::size_t limit) {
    ElementSet set(degree);
    set.insert(Permutation::identity(degree));
    std::vector<Permutation> used;
    for (const auto& g : gens) {
        if (g.degree() != degree) throw InputError("generator degree mismatch");
        if (!extend_closure(set, used, g, limit)) return std::nullopt;
        used.push_back(g);
    }
    return set;
}

// ---------------------------------------------------------------------------

struct PermGroup::Cache {
    std::mutex mu;
    std::optional<std::uint64_t> order;
    std::shared_ptr<const ElementSet> elements;
    std::shared_ptr<const ConjugacyClasses> classes;
};

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), cache_(std::make_shared<Cache>()) {
    if (degree < 1) throw InputError("group degree must be at least 1");
    for (auto& g : generators) {
        if (g.degree() != degree)
            throw InputError("generator " + g.to_string() + " has degree " + std::to_string(g.degree()) +
                             ", group degree is " + std::to_string(degree));
        if (!g.is_identity()) gens_.push_back(std::move(g));
    }
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, ElementSet elements)
    : PermGroup(degree, std::move(generators)) {
    cache_->order = elements.size();
    cache_->elements = std::make_shared<const ElementSet>(std::move(elements));
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::parse(int degree, const std::vector<std::string>& generators) {
    std::vector<Permutation> gens;
    for (const auto& s : generators) gens.push_back(Permutation::parse(s, degree));
    return PermGroup(degree, std::move(gens));
}

std::optional<std::uint64_t> PermGroup::known_order() const {
    std::lock_guard lock(cache_->mu);
    return cache_->order;
}

PermGroup PermGroup::with_known_order(std::uint64_t order) const {
    PermGroup g(degree_, gens_);
    g.label_ = label_;
    g.cache_->order = order;
    return g;
}

PermGroup PermGroup::with_label(std::string label) const {
    PermGroup g = *this;
    g.label_ = std::move(label);
    return g;
}

std::uint64_t PermGroup::order() const {
    {
        std::lock_guard lock(cache_->mu);
        if (cache_->order) return *cache_->order;
    }
    if (auto giant = giant_order(*this)) {
        std::lock_guard lock(cache_->mu);
        cache_->order = *giant;
        return *giant;
    }
    return elements().size();
}

bool PermGroup::is_materialized() const {
    std::lock_guard lock(cache_->mu);
    return cache_->elements != nullptr;
}

const ElementSet& PermGroup::elements() const {
    {
        std::lock_guard lock(cache_->mu);
        if (cache_->elements) return *cache_->elements;
        if (cache_->order && *cache_->order > limits().group_cap)
            throw CapExceeded("group of order " + std::to_string(*cache_->order) +
                              " exceeds the materialization cap " + std::to_string(limits().group_cap));
    }
    auto set = closure_limited(degree_, gens_, limits().group_cap);
    if (!set)
        throw CapExceeded("group on " + std::to_string(degree_) + " points exceeds the materialization cap " +
                          std::to_string(limits().group_cap));
    std::lock_guard lock(cache_->mu);
    if (!cache_->elements) {
        if (cache_->order && *cache_->order != set->size())
            throw InvariantViolation("recorded order " + std::to_string(*cache_->order) +
                                     " disagrees with closure size " + std::to_string(set->size()));
        cache_->order = set->size();
        cache_->elements = std::make_shared<const ElementSet>(std::move(*set));
    }
    return *cache_->elements;
}

bool PermGroup::contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    return elements().contains(p);
}

const ConjugacyClasses& PermGroup::classes() const {
    {
        std::lock_guard lock(cache_->mu);
        if (cache_->classes) return *cache_->classes;
    }
    const ElementSet& el = elements();
    const std::size_t n = el.size();
    constexpr std::uint32_t unset = 0xffffffffu;
    std::vector<std::uint32_t> cls(n, unset);
    struct Raw {
        std::vector<int> type;
        std::size_t min_index;
        std::vector<std::size_t> members;
    };
    std::vector<Raw> raw;
    for (std::size_t i = 0; i < n; ++i) {
        if (cls[i] != unset) continue;
        const auto id = static_cast<std::uint32_t>(raw.size());
        Raw r{el[i].cycle_type(), i, {i}};
        cls[i] = id;
        for (std::size_t k = 0; k < r.members.size(); ++k) {
            const Permutation& x = el[r.members[k]];
            for (const auto& g : gens_) {
                std::size_t j = el.find(conjugate(x, g));
                if (cls[j] == unset) {
                    cls[j] = id;
                    r.members.push_back(j);
                    if (el[j] < el[r.min_index]) r.min_index = j;
                }
            }
        }
        raw.push_back(std::move(r));
    }
    std::vector<std::size_t> order(raw.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (raw[a].type != raw[b].type)
            return std::lexicographical_compare(raw[a].type.begin(), raw[a].type.end(), raw[b].type.begin(),
                                                raw[b].type.end());
        return el[raw[a].min_index] < el[raw[b].min_index];
    });
    auto cc = std::make_shared<ConjugacyClasses>();
    std::vector<std::uint32_t> relabel(raw.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        relabel[order[k]] = static_cast<std::uint32_t>(k);
        cc->reps.push_back(raw[order[k]].min_index);
        cc->sizes.push_back(raw[order[k]].members.size());
    }
    cc->class_of.resize(n);
    for (std::size_t i = 0; i < n; ++i) cc->class_of[i] = relabel[cls[i]];
    std::lock_guard lock(cache_->mu);
    if (!cache_->classes) cache_->classes = std::move(cc);
    return *cache_->classes;
}

}  // namespace hit
