#include "graded.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sseq::alg {

int Presentation::add_generator(const Generator& g)
{
    if (find_gen(g.name) || find_modgen(g.name))
        throw std::runtime_error("duplicate generator name: " + g.name);
    if (g.stem == 0 && g.fil == 0)
        throw std::runtime_error("generator " + g.name + " has zero bidegree");
    if (g.weight < 1)
        throw std::runtime_error("generator " + g.name + " has weight < 1");
    gens_.push_back(g);
    power_cap_.push_back(g.parity == Parity::ext ? 1 : INT_MAX);
    // recompute name ranks
    std::vector<int> idx(gens_.size());
    for (size_t i = 0; i < idx.size(); ++i)
        idx[i] = int(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return gens_[a].name < gens_[b].name; });
    name_rank_.assign(gens_.size(), 0);
    for (size_t r = 0; r < idx.size(); ++r)
        name_rank_[idx[r]] = int(r);
    return int(gens_.size()) - 1;
}

int Presentation::add_modgen(const ModGen& m)
{
    if (find_gen(m.name) || find_modgen(m.name))
        throw std::runtime_error("duplicate generator name: " + m.name);
    modgens_.push_back(m);
    return int(modgens_.size()) - 1;
}

std::optional<int> Presentation::find_gen(const std::string& name) const
{
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name)
            return int(i);
    return std::nullopt;
}

std::optional<int> Presentation::find_modgen(const std::string& name) const
{
    for (size_t i = 0; i < modgens_.size(); ++i)
        if (modgens_[i].name == name)
            return int(i);
    return std::nullopt;
}

Trideg Presentation::degree(const Monomial& m) const
{
    Trideg d;
    for (auto& x : m.f) {
        const Generator& g = gens_[x.gen];
        d.stem += g.stem * x.exp;
        d.fil += g.fil * x.exp;
        d.mot += g.mot * x.exp;
    }
    if (m.modgen >= 0) {
        const ModGen& g = modgens_[m.modgen];
        d.stem += g.stem;
        d.fil += g.fil;
        d.mot += g.mot;
    }
    return d;
}

long long Presentation::order_weight(const Monomial& m) const
{
    long long w = 0;
    for (auto& x : m.f)
        w += (long long)gens_[x.gen].weight * x.exp;
    return w;
}

int Presentation::cmp(const Monomial& a, const Monomial& b) const
{
    if (a.modgen != b.modgen)
        return a.modgen < b.modgen ? -1 : 1;
    long long wa = order_weight(a), wb = order_weight(b);
    if (wa != wb)
        return wa < wb ? -1 : 1;
    // lex over name-sorted generators: higher exponent first
    std::vector<int> ea(gens_.size(), 0), eb(gens_.size(), 0);
    for (auto& x : a.f)
        ea[name_rank_[x.gen]] = x.exp;
    for (auto& x : b.f)
        eb[name_rank_[x.gen]] = x.exp;
    for (size_t i = 0; i < gens_.size(); ++i)
        if (ea[i] != eb[i])
            return ea[i] < eb[i] ? -1 : 1;
    return 0;
}

std::optional<Monomial> Presentation::mono_mul(const Monomial& a, const Monomial& b) const
{
    if (a.modgen >= 0 && b.modgen >= 0)
        throw std::runtime_error("cannot multiply two module elements");
    Monomial out;
    out.modgen = a.modgen >= 0 ? a.modgen : b.modgen;
    size_t i = 0, j = 0;
    while (i < a.f.size() || j < b.f.size()) {
        Factor x;
        if (i < a.f.size() && (j >= b.f.size() || a.f[i].gen < b.f[j].gen))
            x = a.f[i++];
        else if (j < b.f.size() && (i >= a.f.size() || b.f[j].gen < a.f[i].gen))
            x = b.f[j++];
        else {
            x = {a.f[i].gen, a.f[i].exp + b.f[j].exp};
            ++i, ++j;
        }
        if (gens_[x.gen].parity == Parity::ext && x.exp > 1)
            return std::nullopt;
        out.f.push_back(x);
    }
    return out;
}

bool Presentation::divides(const Monomial& lead, const Monomial& m) const
{
    if (lead.modgen >= 0 && lead.modgen != m.modgen)
        return false;
    for (auto& x : lead.f)
        if (m.exp_of(x.gen) < x.exp)
            return false;
    return true;
}

Monomial Presentation::quotient(const Monomial& m, const Monomial& lead) const
{
    Monomial q;
    q.modgen = lead.modgen >= 0 ? -1 : m.modgen;
    for (auto& x : m.f) {
        int e = x.exp - lead.exp_of(x.gen);
        assert(e >= 0);
        if (e > 0)
            q.f.push_back({x.gen, e});
    }
    return q;
}

bool Presentation::reducible(const Monomial& m) const
{
    for (auto& r : rels_)
        if (divides(r.lead, m))
            return true;
    return false;
}

void Presentation::sort_terms(std::vector<Monomial>& t) const
{
    std::sort(t.begin(), t.end(), [&](const Monomial& a, const Monomial& b) { return cmp(a, b) < 0; });
    // cancel duplicate pairs (char 2)
    std::vector<Monomial> out;
    for (size_t i = 0; i < t.size();) {
        size_t j = i;
        while (j < t.size() && t[j] == t[i])
            ++j;
        if ((j - i) & 1)
            out.push_back(t[i]);
        i = j;
    }
    t.swap(out);
}

void Presentation::add_relation(const Element& e)
{
    std::vector<Monomial> terms = e.terms;
    sort_terms(terms);
    if (terms.empty())
        throw std::runtime_error("relation is identically zero");
    Trideg d0 = degree(terms[0]);
    for (auto& m : terms)
        if (!(degree(m) == d0))
            throw std::runtime_error("relation not homogeneous");
    Relation r;
    r.lead = terms.back();
    terms.pop_back();
    if (!terms.empty() && cmp(terms.back(), r.lead) == 0)
        throw std::runtime_error("relation has tied lead monomials; adjust weights");
    r.tail.terms = terms;
    rels_.push_back(r);
    // track power caps from pure-power monomial relations g^k -> lower
    if (r.lead.modgen < 0 && r.lead.f.size() == 1 && r.tail.is_zero()) {
        int g = r.lead.f[0].gen;
        power_cap_[g] = std::min(power_cap_[g], r.lead.f[0].exp - 1);
    }
}

Element Presentation::reduce(Element e) const
{
    std::vector<Monomial> work = e.terms;
    sort_terms(work);
    std::vector<Monomial> done;
    int guard = 0;
    while (!work.empty()) {
        if (++guard > 2000000)
            throw std::runtime_error("rewriting did not terminate");
        Monomial m = work.back();
        work.pop_back();
        const Relation* hit = nullptr;
        for (auto& r : rels_)
            if (divides(r.lead, m)) {
                hit = &r;
                break;
            }
        if (!hit) {
            done.push_back(m);
            continue;
        }
        Monomial q = quotient(m, hit->lead);
        for (auto& t : hit->tail.terms) {
            auto p = mono_mul(q, t);
            if (p)
                work.push_back(*p);
        }
        sort_terms(work);
    }
    sort_terms(done);
    return Element{done};
}

Element Presentation::multiply(const Element& a, const Element& b) const
{
    std::vector<Monomial> terms;
    for (auto& x : a.terms)
        for (auto& y : b.terms) {
            auto p = mono_mul(x, y);
            if (p)
                terms.push_back(*p);
        }
    sort_terms(terms);
    return reduce(Element{terms});
}

Element Presentation::add(Element a, const Element& b) const
{
    a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
    sort_terms(a.terms);
    return a;
}

namespace {

struct EnumState {
    const Presentation* pres;
    const Window* win;
    Monomial current;
    Trideg deg;
    std::map<Trideg, std::vector<Monomial>>* out;
    // exclusion pairs: leads of the form g*h with exp 1 each
    std::vector<std::pair<int, int>> pairs;
    long long nodes = 0;
};

// achievable (stem, fil) deltas over generators >= from, given exclusions
void rest_ranges(const EnumState& st, size_t from, const std::vector<bool>& excluded, long long& stem_lo,
                 long long& stem_hi, long long& fil_lo, long long& fil_hi)
{
    const long long INF = LLONG_MAX / 4;
    stem_lo = stem_hi = fil_lo = fil_hi = 0;
    for (size_t j = from; j < size_t(st.pres->gen_count()); ++j) {
        if (excluded[j])
            continue;
        const Generator& g = st.pres->gen(j);
        long long cap = st.pres->power_cap(int(j));
        auto bump = [&](long long& lo, long long& hi, int d) {
            if (d > 0)
                hi = std::min(INF, hi + (cap >= INF ? INF : cap * d));
            else if (d < 0)
                lo = std::max(-INF, lo + (cap >= INF ? -INF : cap * d));
        };
        bump(stem_lo, stem_hi, g.stem);
        bump(fil_lo, fil_hi, g.fil);
    }
}

void enumerate(EnumState& st, size_t gi, std::vector<bool> excluded)
{
    if (++st.nodes > 8000000)
        throw std::runtime_error("basis enumeration exceeded node budget; window too large?");
    const Presentation& P = *st.pres;
    if (gi == size_t(P.gen_count())) {
        if (st.win->contains(st.deg.bi()))
            (*st.out)[st.deg].push_back(st.current);
        return;
    }
    const Generator& g = P.gen(gi);
    // exponent 0 branch
    enumerate(st, gi + 1, excluded);
    if (excluded[gi])
        return;
    // mark exclusions induced by using this generator
    std::vector<bool> ex2 = excluded;
    for (auto& pr : st.pairs) {
        if (pr.first == int(gi))
            ex2[pr.second] = true;
        if (pr.second == int(gi))
            ex2[pr.first] = true;
    }
    Monomial saved = st.current;
    Trideg saved_deg = st.deg;
    int cap = g.parity == Parity::ext ? 1 : INT_MAX;
    for (auto& r : P.relations())
        if (r.lead.modgen < 0 && r.lead.f.size() == 1 && r.lead.f[0].gen == gi && r.tail.is_zero())
            cap = std::min(cap, r.lead.f[0].exp - 1);
    long long slo, shi, flo, fhi;
    rest_ranges(st, gi + 1, ex2, slo, shi, flo, fhi);
    int hard_cap = 65536;
    for (int e = 1; e <= cap && e <= hard_cap; ++e) {
        st.deg.stem += g.stem;
        st.deg.fil += g.fil;
        st.deg.mot += g.mot;
        // feasibility of any completion
        long long smin = st.deg.stem + slo, smax = st.deg.stem + shi;
        long long fmin = st.deg.fil + flo, fmax = st.deg.fil + fhi;
        bool feasible = smax >= st.win->stem_min && smin <= st.win->stem_max && fmax >= st.win->fil_min &&
                        fmin <= st.win->fil_max;
        if (!feasible) {
            // monotone exit: adding more of g moves the failing coordinate
            // further out whenever its sign cannot be compensated
            bool worse = (g.stem > 0 && smin > st.win->stem_max) || (g.stem < 0 && smax < st.win->stem_min) ||
                         (g.fil > 0 && fmin > st.win->fil_max) || (g.fil < 0 && fmax < st.win->fil_min);
            if (worse)
                break;
            continue;
        }
        // build current with exponent e
        st.current = saved;
        st.current.f.push_back({uint16_t(gi), e});
        std::sort(st.current.f.begin(), st.current.f.end(),
                  [](const Factor& a, const Factor& b) { return a.gen < b.gen; });
        // prune monomials divisible by a relation lead fully supported so far
        bool dead = false;
        for (auto& r : P.relations()) {
            if (r.lead.modgen >= 0 && r.lead.modgen != st.current.modgen)
                continue;
            bool supported = true;
            for (auto& x : r.lead.f)
                if (x.gen > gi) {
                    supported = false;
                    break;
                }
            if (!supported)
                continue;
            bool div = true;
            for (auto& x : r.lead.f)
                if (st.current.exp_of(x.gen) < x.exp) {
                    div = false;
                    break;
                }
            if (div) {
                dead = true;
                break;
            }
        }
        if (!dead)
            enumerate(st, gi + 1, ex2);
        if (e == hard_cap)
            throw std::runtime_error("basis enumeration hit exponent cap for generator " + g.name);
    }
    st.current = saved;
    st.deg = saved_deg;
}

} // namespace

std::map<Trideg, std::vector<Monomial>> Presentation::basis(const Window& w) const
{
    std::map<Trideg, std::vector<Monomial>> out;
    std::vector<std::pair<int, int>> pairs;
    for (auto& r : rels_)
        if (r.lead.modgen < 0 && r.lead.f.size() == 2 && r.lead.f[0].exp == 1 && r.lead.f[1].exp == 1)
            pairs.push_back({r.lead.f[0].gen, r.lead.f[1].gen});

    auto run_for = [&](int mg) {
        EnumState st;
        st.pres = this;
        st.win = &w;
        st.out = &out;
        st.pairs = pairs;
        st.current.modgen = mg;
        st.deg = degree(st.current);
        enumerate(st, 0, std::vector<bool>(gens_.size(), false));
    };
    if (modgens_.empty())
        run_for(-1);
    else
        for (int mg = 0; mg < modgen_count(); ++mg)
            run_for(mg);

    for (auto& [d, monos] : out)
        std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) { return cmp(a, b) < 0; });
    return out;
}

std::map<Bidegree, std::vector<Monomial>> Presentation::basis_bi(const Window& w) const
{
    std::map<Bidegree, std::vector<Monomial>> out;
    for (auto& [d, monos] : basis(w)) {
        auto& v = out[d.bi()];
        v.insert(v.end(), monos.begin(), monos.end());
    }
    for (auto& [d, monos] : out)
        std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) { return cmp(a, b) < 0; });
    return out;
}

std::string Presentation::to_string(const Monomial& m) const
{
    std::ostringstream os;
    bool first = true;
    for (auto& x : m.f) {
        if (!first)
            os << "*";
        os << gens_[x.gen].name;
        if (x.exp != 1)
            os << "^" << x.exp;
        first = false;
    }
    if (m.modgen >= 0) {
        if (!first)
            os << ".";
        os << modgens_[m.modgen].name;
        first = false;
    }
    if (first)
        os << "1";
    return os.str();
}

std::string Presentation::to_string(const Element& e) const
{
    if (e.terms.empty())
        return "0";
    std::ostringstream os;
    for (size_t i = 0; i < e.terms.size(); ++i) {
        if (i)
            os << " + ";
        os << to_string(e.terms[i]);
    }
    return os.str();
}

namespace {
std::string strip(const std::string& s)
{
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}
} // namespace

Monomial Presentation::parse_monomial(const std::string& text) const
{
    std::string s = strip(text);
    if (s.empty())
        throw std::runtime_error("empty monomial");
    Monomial m;
    if (s == "1")
        return m;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t star = s.find('*', pos);
        std::string piece = strip(s.substr(pos, star == std::string::npos ? std::string::npos : star - pos));
        pos = star == std::string::npos ? s.size() : star + 1;
        if (piece.empty())
            throw std::runtime_error("bad monomial: " + text);
        // optional module generator after a dot
        std::string modpart;
        size_t dot = piece.find('.');
        if (dot != std::string::npos) {
            modpart = strip(piece.substr(dot + 1));
            piece = strip(piece.substr(0, dot));
        }
        if (!piece.empty() && piece != "1") {
            std::string name = piece;
            int exp = 1;
            size_t caret = piece.find('^');
            if (caret != std::string::npos) {
                name = strip(piece.substr(0, caret));
                exp = std::stoi(piece.substr(caret + 1));
            }
            if (exp < 0)
                throw std::runtime_error("negative exponent in " + text + " (declare an inverse generator)");
            auto gi = find_gen(name);
            if (gi) {
                if (exp > 0) {
                    bool merged = false;
                    for (auto& x : m.f)
                        if (x.gen == uint16_t(*gi)) {
                            x.exp += exp;
                            merged = true;
                        }
                    if (!merged)
                        m.f.push_back({uint16_t(*gi), exp});
                }
            } else {
                auto mg = find_modgen(name);
                if (!mg)
                    throw std::runtime_error("unknown generator: " + name);
                if (exp != 1 || m.modgen >= 0)
                    throw std::runtime_error("module generator misuse in " + text);
                m.modgen = *mg;
            }
        }
        if (!modpart.empty()) {
            auto mg = find_modgen(modpart);
            if (!mg)
                throw std::runtime_error("unknown module generator: " + modpart);
            if (m.modgen >= 0)
                throw std::runtime_error("two module generators in " + text);
            m.modgen = *mg;
        }
    }
    std::sort(m.f.begin(), m.f.end(), [](const Factor& a, const Factor& b) { return a.gen < b.gen; });
    for (auto& x : m.f)
        if (gens_[x.gen].parity == Parity::ext && x.exp > 1)
            throw std::runtime_error("exterior generator squared in " + text);
    return m;
}

Element Presentation::parse_element(const std::string& text) const
{
    std::string s = strip(text);
    if (s == "0")
        return Element{};
    std::vector<Monomial> terms;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t plus = s.find('+', pos);
        std::string piece = s.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
        terms.push_back(parse_monomial(piece));
        if (plus == std::string::npos)
            break;
        pos = plus + 1;
    }
    sort_terms(terms);
    return Element{terms};
}

} // namespace sseq::alg
