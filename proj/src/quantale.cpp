#include "qdom/quantale.hpp"

#include <algorithm>
#include <unordered_map>

namespace qdom {

namespace {

std::string tuple2(const FiniteQuantale& q, Elem a, Elem b) {
    return "(" + q.label(a) + ", " + q.label(b) + ")";
}
std::string tuple3(const FiniteQuantale& q, Elem a, Elem b, Elem c) {
    return "(" + q.label(a) + ", " + q.label(b) + ", " + q.label(c) + ")";
}

std::string renderSubset(const FiniteQuantale& q, std::uint64_t mask) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (mask >> i & 1u) {
            if (!first) s += ", ";
            s += q.label(static_cast<Elem>(i));
            first = false;
        }
    }
    return s + "}";
}

}  // namespace

Elem FiniteQuantale::indexOf(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<Elem>(i);
    throw StructuralError("unknown quantale element label '" + label + "'");
}

FiniteQuantale FiniteQuantale::fromTables(std::string name, std::vector<std::string> elements,
                                          std::vector<std::vector<bool>> leq,
                                          std::vector<std::vector<Elem>> tensor, Elem unit) {
    const std::size_t n = elements.size();
    if (n == 0) throw StructuralError("quantale carrier is empty");
    if (static_cast<int>(n) > caps().quantale_carrier)
        throw CapExceeded("quantale carrier exceeds configured size cap", n,
                          static_cast<std::size_t>(caps().quantale_carrier));
    if (leq.size() != n || tensor.size() != n)
        throw StructuralError("leq/tensor tables are not |L| x |L|");
    FiniteQuantale q;
    q.name_ = std::move(name);
    q.labels_ = std::move(elements);
    {
        std::unordered_map<std::string, int> seen;
        for (const auto& l : q.labels_)
            if (!seen.emplace(l, 1).second)
                throw StructuralError("duplicate quantale element label '" + l + "'");
    }
    q.leq_.assign(n * n, false);
    q.tensor_.assign(n * n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        if (leq[i].size() != n || tensor[i].size() != n)
            throw StructuralError("leq/tensor tables are not |L| x |L|");
        for (std::size_t j = 0; j < n; ++j) {
            q.leq_[i * n + j] = leq[i][j];
            Elem t = tensor[i][j];
            if (t < 0 || t >= static_cast<Elem>(n))
                throw StructuralError("tensor table entry out of carrier at (" +
                                      q.labels_[i] + ", " + q.labels_[j] + ")");
            q.tensor_[i * n + j] = t;
        }
    }
    if (unit < 0 || unit >= static_cast<Elem>(n))
        throw StructuralError("unit element out of carrier");
    q.unit_ = unit;
    q.derive();
    return q;
}

FiniteQuantale FiniteQuantale::fromTriples(
    std::string name, std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& leqPairs,
    const std::vector<std::array<std::string, 3>>& tensorTriples, const std::string& unit) {
    const std::size_t n = elements.size();
    if (n == 0) throw StructuralError("quantale carrier is empty");
    FiniteQuantale probe;
    probe.labels_ = elements;
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
    for (const auto& [a, b] : leqPairs) {
        auto ia = static_cast<std::size_t>(probe.indexOf(a));
        auto ib = static_cast<std::size_t>(probe.indexOf(b));
        leq[ia][ib] = true;
    }
    // reflexive-transitive closure
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (leq[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (leq[k][j]) leq[i][j] = true;

    std::vector<std::vector<Elem>> tensor(n, std::vector<Elem>(n, -1));
    for (const auto& t : tensorTriples) {
        auto ia = static_cast<std::size_t>(probe.indexOf(t[0]));
        auto ib = static_cast<std::size_t>(probe.indexOf(t[1]));
        Elem ic = probe.indexOf(t[2]);
        tensor[ia][ib] = ic;
    }
    // fill commuted entries, then demand totality
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (tensor[i][j] == -1 && tensor[j][i] != -1) tensor[i][j] = tensor[j][i];
            if (tensor[i][j] == -1)
                throw StructuralError("tensor table missing entry at (" + elements[i] + ", " +
                                      elements[j] + ")");
        }
    Elem u = probe.indexOf(unit);
    return fromTables(std::move(name), std::move(elements), std::move(leq), std::move(tensor), u);
}

Elem FiniteQuantale::joinOfSet(const std::vector<Elem>& s) const {
    const auto n = static_cast<Elem>(labels_.size());
    Elem best = -1;
    for (Elem c = 0; c < n; ++c) {
        bool upper = true;
        for (Elem x : s)
            if (!leq(x, c)) {
                upper = false;
                break;
            }
        if (!upper) continue;
        if (best == -1 || leq(c, best)) best = c;
    }
    if (best == -1) return -1;
    // least upper bound must lie below every upper bound
    for (Elem c = 0; c < n; ++c) {
        bool upper = true;
        for (Elem x : s)
            if (!leq(x, c)) {
                upper = false;
                break;
            }
        if (upper && !leq(best, c)) return -1;
    }
    return best;
}

Elem FiniteQuantale::meetOfSet(const std::vector<Elem>& s) const {
    const auto n = static_cast<Elem>(labels_.size());
    Elem best = -1;
    for (Elem c = 0; c < n; ++c) {
        bool lower = true;
        for (Elem x : s)
            if (!leq(c, x)) {
                lower = false;
                break;
            }
        if (!lower) continue;
        if (best == -1 || leq(best, c)) best = c;
    }
    if (best == -1) return -1;
    for (Elem c = 0; c < n; ++c) {
        bool lower = true;
        for (Elem x : s)
            if (!leq(c, x)) {
                lower = false;
                break;
            }
        if (lower && !leq(c, best)) return -1;
    }
    return best;
}

void FiniteQuantale::derive() {
    const auto n = static_cast<Elem>(labels_.size());
    bottom_ = joinOfSet({});
    top_ = meetOfSet({});
    join_.assign(static_cast<std::size_t>(n) * n, -1);
    meet_.assign(static_cast<std::size_t>(n) * n, -1);
    resid_.assign(static_cast<std::size_t>(n) * n, -1);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            join_[idx(a, b)] = joinOfSet({a, b});
            meet_[idx(a, b)] = meetOfSet({a, b});
        }
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            std::vector<Elem> cands;
            for (Elem c = 0; c < n; ++c)
                if (leq(tensor(a, c), b)) cands.push_back(c);
            resid_[idx(a, b)] = joinOfSet(cands);
        }
}

ValidationReport FiniteQuantale::validate() const {
    ValidationReport rep;
    const auto n = static_cast<Elem>(labels_.size());

    {  // partial order
        CheckResult r = CheckResult::ok();
        for (Elem a = 0; a < n && r.pass; ++a)
            if (!leq(a, a)) r = CheckResult::fail("order-reflexive", label(a));
        for (Elem a = 0; a < n && r.pass; ++a)
            for (Elem b = 0; b < n && r.pass; ++b)
                if (a != b && leq(a, b) && leq(b, a))
                    r = CheckResult::fail("order-antisymmetric", tuple2(*this, a, b));
        for (Elem a = 0; a < n && r.pass; ++a)
            for (Elem b = 0; b < n && r.pass; ++b)
                for (Elem c = 0; c < n && r.pass; ++c)
                    if (leq(a, b) && leq(b, c) && !leq(a, c))
                        r = CheckResult::fail("order-transitive", tuple3(*this, a, b, c));
        rep.add("partial-order", r);
    }
    {  // finite completeness: pairwise joins/meets plus bottom/top
        CheckResult r = CheckResult::ok();
        if (bottom_ == -1) r = CheckResult::fail("lattice-complete", "no bottom element");
        if (r.pass && top_ == -1) r = CheckResult::fail("lattice-complete", "no top element");
        for (Elem a = 0; a < n && r.pass; ++a)
            for (Elem b = 0; b < n && r.pass; ++b) {
                if (join(a, b) == -1)
                    r = CheckResult::fail("lattice-complete", "no join of " + tuple2(*this, a, b));
                else if (meet(a, b) == -1)
                    r = CheckResult::fail("lattice-complete", "no meet of " + tuple2(*this, a, b));
            }
        rep.add("lattice-complete", r);
    }
    {
        CheckResult r = CheckResult::ok();
        for (Elem a = 0; a < n && r.pass; ++a)
            for (Elem b = 0; b < n && r.pass; ++b)
                if (tensor(a, b) != tensor(b, a))
                    r = CheckResult::fail("tensor-commutative", tuple2(*this, a, b));
        rep.add("tensor-commutative", r);
    }
    {
        CheckResult r = CheckResult::ok();
        for (Elem a = 0; a < n && r.pass; ++a)
            for (Elem b = 0; b < n && r.pass; ++b)
                for (Elem c = 0; c < n && r.pass; ++c)
                    if (tensor(tensor(a, b), c) != tensor(a, tensor(b, c)))
                        r = CheckResult::fail("tensor-associative", tuple3(*this, a, b, c));
        rep.add("tensor-associative", r);
    }
    {
        CheckResult r = CheckResult::ok();
        for (Elem a = 0; a < n && r.pass; ++a)
            if (tensor(unit_, a) != a)
                r = CheckResult::fail("tensor-unit", label(a));
        rep.add("tensor-unit", r);
    }
    {  // a (x) (join S) = join { a (x) s } over all subsets S when small,
       // otherwise binary joins plus the empty join (sufficient by folding)
        CheckResult r = CheckResult::ok();
        if (n <= 12) {
            const std::uint64_t total = 1ull << n;
            for (Elem a = 0; a < n && r.pass; ++a)
                for (std::uint64_t mask = 0; mask < total && r.pass; ++mask) {
                    std::vector<Elem> s, ts;
                    for (Elem i = 0; i < n; ++i)
                        if (mask >> i & 1u) {
                            s.push_back(i);
                            ts.push_back(tensor(a, i));
                        }
                    Elem js = joinOfSet(s);
                    if (js == -1) continue;  // reported by lattice-complete
                    if (tensor(a, js) != joinOfSet(ts))
                        r = CheckResult::fail("tensor-join-distributive",
                                              label(a) + " over " + renderSubset(*this, mask));
                }
        } else {
            for (Elem a = 0; a < n && r.pass; ++a) {
                if (bottom_ != -1 && tensor(a, bottom_) != bottom_)
                    r = CheckResult::fail("tensor-join-distributive",
                                          label(a) + " over {} (bottom not absorbed)");
                for (Elem b = 0; b < n && r.pass; ++b)
                    for (Elem c = 0; c < n && r.pass; ++c) {
                        Elem j = join(b, c);
                        if (j != -1 && tensor(a, j) != join(tensor(a, b), tensor(a, c)))
                            r = CheckResult::fail("tensor-join-distributive",
                                                  tuple3(*this, a, b, c));
                    }
            }
        }
        rep.add("tensor-join-distributive", r);
    }
    return rep;
}

ValidationReport FiniteQuantale::checkResiduationLaws() const {
    ValidationReport rep;
    const auto n = static_cast<Elem>(labels_.size());

    {  // adjunction: a (x) c <= b  <=>  c <= a -> b
        CheckResult r = CheckResult::ok();
        for (Elem a = 0; a < n && r.pass; ++a)
            for (Elem b = 0; b < n && r.pass; ++b)
                for (Elem c = 0; c < n && r.pass; ++c)
                    if (leq(tensor(a, c), b) != leq(c, residuate(a, b)))
                        r = CheckResult::fail("adjunction", tuple3(*this, a, b, c));
        rep.add("adjunction", r);
    }
    {  // Q1: u <= a -> b  iff  a <= b
        CheckResult r = CheckResult::ok();
        for (Elem a = 0; a < n && r.pass; ++a)
            for (Elem b = 0; b < n && r.pass; ++b)
                if (leq(unit_, residuate(a, b)) != leq(a, b))
                    r = CheckResult::fail("Q1", tuple2(*this, a, b));
        rep.add("Q1", r);
    }
    {  // Q2: 0 -> a = 1
        CheckResult r = CheckResult::ok();
        for (Elem a = 0; a < n && r.pass; ++a)
            if (residuate(bottom_, a) != top_) r = CheckResult::fail("Q2", label(a));
        rep.add("Q2", r);
    }
    {  // Q3: u -> a = a
        CheckResult r = CheckResult::ok();
        for (Elem a = 0; a < n && r.pass; ++a)
            if (residuate(unit_, a) != a) r = CheckResult::fail("Q3", label(a));
        rep.add("Q3", r);
    }
    {  // Q4: a (x) (a -> b) <= b
        CheckResult r = CheckResult::ok();
        for (Elem a = 0; a < n && r.pass; ++a)
            for (Elem b = 0; b < n && r.pass; ++b)
                if (!leq(tensor(a, residuate(a, b)), b))
                    r = CheckResult::fail("Q4", tuple2(*this, a, b));
        rep.add("Q4", r);
    }
    {  // Q5: a -> (b -> c) = (a (x) b) -> c
        CheckResult r = CheckResult::ok();
        for (Elem a = 0; a < n && r.pass; ++a)
            for (Elem b = 0; b < n && r.pass; ++b)
                for (Elem c = 0; c < n && r.pass; ++c)
                    if (residuate(a, residuate(b, c)) != residuate(tensor(a, b), c))
                        r = CheckResult::fail("Q5", tuple3(*this, a, b, c));
        rep.add("Q5", r);
    }
    // Q6/Q7 over all subsets when the carrier is small; never silently
    // sampled here -- fixtures stay within the exhaustive range.
    if (n <= 12) {
        const std::uint64_t total = 1ull << n;
        {  // Q6: (join a_i) -> b = meet (a_i -> b)
            CheckResult r = CheckResult::ok();
            for (std::uint64_t mask = 0; mask < total && r.pass; ++mask) {
                std::vector<Elem> s;
                for (Elem i = 0; i < n; ++i)
                    if (mask >> i & 1u) s.push_back(i);
                Elem js = joinOfSet(s);
                for (Elem b = 0; b < n && r.pass; ++b) {
                    std::vector<Elem> rs;
                    for (Elem a : s) rs.push_back(residuate(a, b));
                    if (residuate(js, b) != meetOfSet(rs))
                        r = CheckResult::fail("Q6", renderSubset(*this, mask) + " -> " + label(b));
                }
            }
            rep.add("Q6", r);
        }
        {  // Q7: a -> (meet b_j) = meet (a -> b_j)
            CheckResult r = CheckResult::ok();
            for (std::uint64_t mask = 0; mask < total && r.pass; ++mask) {
                std::vector<Elem> s;
                for (Elem i = 0; i < n; ++i)
                    if (mask >> i & 1u) s.push_back(i);
                Elem ms = meetOfSet(s);
                for (Elem a = 0; a < n && r.pass; ++a) {
                    std::vector<Elem> rs;
                    for (Elem b : s) rs.push_back(residuate(a, b));
                    if (residuate(a, ms) != meetOfSet(rs))
                        r = CheckResult::fail("Q7", label(a) + " -> " + renderSubset(*this, mask));
                }
            }
            rep.add("Q7", r);
        }
    } else {
        {  // binary fallback
            CheckResult r = CheckResult::ok();
            for (Elem a = 0; a < n && r.pass; ++a)
                for (Elem b = 0; b < n && r.pass; ++b)
                    for (Elem c = 0; c < n && r.pass; ++c)
                        if (residuate(join(a, b), c) != meet(residuate(a, c), residuate(b, c)))
                            r = CheckResult::fail("Q6", tuple3(*this, a, b, c));
            rep.add("Q6", r);
        }
        {
            CheckResult r = CheckResult::ok();
            for (Elem a = 0; a < n && r.pass; ++a)
                for (Elem b = 0; b < n && r.pass; ++b)
                    for (Elem c = 0; c < n && r.pass; ++c)
                        if (residuate(a, meet(b, c)) != meet(residuate(a, b), residuate(a, c)))
                            r = CheckResult::fail("Q7", tuple3(*this, a, b, c));
            rep.add("Q7", r);
        }
    }
    {  // tensor monotone in each argument
        CheckResult r = CheckResult::ok();
        for (Elem a = 0; a < n && r.pass; ++a)
            for (Elem b = 0; b < n && r.pass; ++b)
                for (Elem c = 0; c < n && r.pass; ++c)
                    if (leq(b, c) && !leq(tensor(a, b), tensor(a, c)))
                        r = CheckResult::fail("tensor-monotone", tuple3(*this, a, b, c));
        rep.add("tensor-monotone", r);
    }
    return rep;
}

std::uint64_t FiniteQuantale::structuralHash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    for (const auto& l : labels_)
        for (char c : l) mix(static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
    for (bool b : leq_) mix(b ? 2u : 1u);
    for (Elem t : tensor_) mix(static_cast<std::uint64_t>(t) + 3u);
    mix(static_cast<std::uint64_t>(unit_) + 7u);
    return h;
}

namespace {

QuantalePtr makeChain(std::string name, int n, bool lukasiewicz) {
    // chain c0 < c1 < ... < c{n-1}; Lukasiewicz: ci (x) cj = c_max(0, i+j-(n-1))
    // Goedel: min
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
    if (n == 2) labels = {"0", "1"};
    if (n == 3) labels = {"0", "half", "1"};
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    std::vector<std::vector<Elem>> tensor(n, std::vector<Elem>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            leq[i][j] = i <= j;
            tensor[i][j] = lukasiewicz ? std::max(0, i + j - (n - 1)) : std::min(i, j);
        }
    auto q = std::make_shared<FiniteQuantale>(FiniteQuantale::fromTables(
        std::move(name), std::move(labels), std::move(leq), std::move(tensor), n - 1));
    return q;
}

QuantalePtr makeNonIntegral3() {
    // chain 0 < u < 1, unit u, 1 (x) 1 = 1
    std::vector<std::string> labels = {"0", "u", "1"};
    std::vector<std::vector<bool>> leq = {{true, true, true},
                                          {false, true, true},
                                          {false, false, true}};
    std::vector<std::vector<Elem>> tensor = {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}};
    return std::make_shared<FiniteQuantale>(
        FiniteQuantale::fromTables("nonintegral-3", std::move(labels), std::move(leq),
                                   std::move(tensor), 1));
}

QuantalePtr makeBooleanSquare() {
    // product of two booleans, componentwise order and meet tensor
    std::vector<std::string> labels = {"00", "01", "10", "11"};
    auto bit = [](int v, int k) { return v >> k & 1; };
    std::vector<std::vector<bool>> leq(4, std::vector<bool>(4));
    std::vector<std::vector<Elem>> tensor(4, std::vector<Elem>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            leq[a][b] = bit(a, 0) <= bit(b, 0) && bit(a, 1) <= bit(b, 1);
            tensor[a][b] = (bit(a, 0) & bit(b, 0)) | ((bit(a, 1) & bit(b, 1)) << 1);
        }
    return std::make_shared<FiniteQuantale>(FiniteQuantale::fromTables(
        "boolean-square", std::move(labels), std::move(leq), std::move(tensor), 3));
}

}  // namespace

QuantalePtr fixtureQuantale(const std::string& id) {
    QuantalePtr q;
    if (id == "boolean")
        q = makeChain("boolean", 2, false);
    else if (id == "lukasiewicz-3")
        q = makeChain("lukasiewicz-3", 3, true);
    else if (id == "lukasiewicz-4")
        q = makeChain("lukasiewicz-4", 4, true);
    else if (id == "goedel-3")
        q = makeChain("goedel-3", 3, false);
    else if (id == "goedel-4")
        q = makeChain("goedel-4", 4, false);
    else if (id == "nonintegral-3")
        q = makeNonIntegral3();
    else if (id == "boolean-square")
        q = makeBooleanSquare();
    else
        throw StructuralError("unknown quantale fixture '" + id + "'");
    auto rep = q->validate();
    if (!rep.allPass())
        throw StructuralError("fixture '" + id + "' failed validation: " +
                              rep.firstFailure()->law);
    return q;
}

std::vector<std::string> fixtureQuantaleIds() {
    return {"boolean",  "lukasiewicz-3", "lukasiewicz-4", "goedel-3",
            "goedel-4", "nonintegral-3", "boolean-square"};
}

}  // namespace qdom
