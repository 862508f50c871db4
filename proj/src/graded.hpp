#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Bigraded F2 algebras and modules presented by generators and relations.
// Generators carry (stem, fil) plus an auxiliary "mot" grading used by the
// tower-indexed spectral sequences. Relations are oriented lead -> tail
// against a weighted degree-lex monomial order and rewriting is used for
// normal forms, products and basis enumeration.

namespace sseq::alg {

struct Bidegree {
    int stem = 0;
    int fil = 0;
    auto operator<=>(const Bidegree&) const = default;
    Bidegree operator+(const Bidegree& o) const { return {stem + o.stem, fil + o.fil}; }
    Bidegree operator-(const Bidegree& o) const { return {stem - o.stem, fil - o.fil}; }
};

struct Trideg {
    int stem = 0;
    int fil = 0;
    int mot = 0;
    auto operator<=>(const Trideg&) const = default;
    Bidegree bi() const { return {stem, fil}; }
};

struct Window {
    int stem_min = 0, stem_max = 0;
    int fil_min = 0, fil_max = 0;
    bool contains(Bidegree b) const
    {
        return b.stem >= stem_min && b.stem <= stem_max && b.fil >= fil_min && b.fil <= fil_max;
    }
};

enum class Parity { poly, ext };

struct Generator {
    std::string name;
    int stem = 0, fil = 0, mot = 0;
    Parity parity = Parity::poly;
    int weight = 1; // monomial-order weight
};

struct ModGen {
    std::string name;
    int stem = 0, fil = 0, mot = 0;
};

struct Factor {
    uint16_t gen = 0;
    int exp = 0;
    auto operator<=>(const Factor&) const = default;
};

// modgen < 0: algebra monomial; otherwise a module monomial a*m_k.
struct Monomial {
    std::vector<Factor> f;
    int modgen = -1;
    bool operator==(const Monomial&) const = default;
    bool is_one() const { return f.empty() && modgen < 0; }
    int exp_of(uint16_t gen) const
    {
        for (auto& x : f)
            if (x.gen == gen)
                return x.exp;
        return 0;
    }
};

struct Element {
    std::vector<Monomial> terms; // kept sorted by the presentation's order, unique
    bool is_zero() const { return terms.empty(); }
    bool operator==(const Element&) const = default;
};

struct Relation {
    Monomial lead;
    Element tail;
};

class Presentation {
public:
    int add_generator(const Generator& g);
    int add_modgen(const ModGen& m);
    // orient the homogeneous element e (= 0) against the monomial order
    void add_relation(const Element& e);

    int gen_count() const { return int(gens_.size()); }
    int modgen_count() const { return int(modgens_.size()); }
    // exponent cap in normal forms: 1 for exterior, k-1 for a g^k = 0
    // relation, INT_MAX otherwise
    int power_cap(int g) const { return power_cap_[g]; }
    const Generator& gen(int i) const { return gens_[i]; }
    const ModGen& modgen(int i) const { return modgens_[i]; }
    const std::vector<Relation>& relations() const { return rels_; }
    std::optional<int> find_gen(const std::string& name) const;
    std::optional<int> find_modgen(const std::string& name) const;
    bool is_module() const { return !modgens_.empty(); }

    Trideg degree(const Monomial& m) const;
    long long order_weight(const Monomial& m) const;
    // monomial order: weighted degree, then lex on name-sorted exponents;
    // returns <0, 0, >0
    int cmp(const Monomial& a, const Monomial& b) const;

    // raw product of monomials (exterior squares collapse to zero);
    // nullopt = zero
    std::optional<Monomial> mono_mul(const Monomial& a, const Monomial& b) const;

    Element reduce(Element e) const;
    Element multiply(const Element& a, const Element& b) const;
    Element add(Element a, const Element& b) const; // symmetric difference
    Element mono_elt(const Monomial& m) const { return Element{{m}}; }

    // normal-form monomials per (stem, fil, mot), deterministic order
    std::map<Trideg, std::vector<Monomial>> basis(const Window& w) const;
    std::map<Bidegree, std::vector<Monomial>> basis_bi(const Window& w) const;

    std::string to_string(const Monomial& m) const;
    std::string to_string(const Element& e) const;

    // parses "a*b^2*c.mg", "1", or sums "x + y"; throws std::runtime_error
    Monomial parse_monomial(const std::string& text) const;
    Element parse_element(const std::string& text) const;

private:
    bool divides(const Monomial& lead, const Monomial& m) const;
    Monomial quotient(const Monomial& m, const Monomial& lead) const;
    bool reducible(const Monomial& m) const;
    void sort_terms(std::vector<Monomial>& t) const;

    std::vector<Generator> gens_;
    std::vector<ModGen> modgens_;
    std::vector<Relation> rels_;
    std::vector<int> name_rank_; // gens sorted by name: rank for lex compare
    std::vector<int> power_cap_; // per gen: cap on exponent in normal forms, INT_MAX if none
    friend class BasisEnumerator;
};

} // namespace sseq::alg
