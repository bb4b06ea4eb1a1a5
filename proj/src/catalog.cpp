#include "nilcohom/catalog.hpp"

namespace nilcohom {

namespace {

std::vector<std::vector<std::string>> block_J_strings(int n) {
    std::vector<std::vector<std::string>> J(n, std::vector<std::string>(n, "0"));
    for (int a = 0; a < n / 2; ++a) {
        J[2 * a][2 * a + 1] = "-1";
        J[2 * a + 1][2 * a] = "1";
    }
    return J;
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - i + 1) / i;
    return r;
}

CatalogEntry torus(const std::string& name, int n) {
    CatalogEntry e;
    e.name = name;
    e.input.name = name;
    e.input.dim = n;
    e.input.cs_kind = CsKind::Endomorphism;
    e.input.matrix = block_J_strings(n);
    for (int k = 0; k <= n; ++k) e.expected.betti.push_back(int(binom(n, k)));
    int m = n / 2;
    for (int p = 0; p <= m; ++p)
        for (int q = 0; q <= m; ++q)
            e.expected.hodge[{p, q}] = int(binom(m, p) * binom(m, q));
    e.expected.abelian_cs = true;
    e.expected.bi_invariant = true;
    e.expected.nilpotency_class = 1;
    e.expected.derham_formal = true;
    e.expected.dolbeault_formal = true;
    e.expected.zero_star_formal = true;
    e.expected.ddbar_overall = true;
    return e;
}

CatalogEntry kodaira_thurston() {
    CatalogEntry e;
    e.name = "kodaira_thurston";
    e.input.name = e.name;
    e.input.dim = 4;
    e.input.brackets = {{1, 2, {{3, "1"}}}};
    e.input.cs_kind = CsKind::Endomorphism;
    e.input.matrix = block_J_strings(4);
    e.expected.betti = {1, 3, 4, 3, 1};
    e.expected.hodge = {{{0, 0}, 1}, {{0, 1}, 2}, {{0, 2}, 1}, {{1, 0}, 1}};
    e.expected.abelian_cs = true;
    e.expected.bi_invariant = false;
    e.expected.nilpotency_class = 2;
    e.expected.derham_formal = false;
    e.expected.dolbeault_formal = false;
    e.expected.zero_star_formal = true;
    e.expected.ddbar_overall = false;
    return e;
}

CatalogEntry iwasawa() {
    CatalogEntry e;
    e.name = "iwasawa";
    e.input.name = e.name;
    e.input.dim = 6;
    // complex Heisenberg: [e1,e3] = e5, [e2,e4] = -e5, [e1,e4] = [e2,e3] = e6,
    // equivalently d omega^3 = -omega^{12}
    e.input.brackets = {{1, 3, {{5, "1"}}},
                        {1, 4, {{6, "1"}}},
                        {2, 3, {{6, "1"}}},
                        {2, 4, {{5, "-1"}}}};
    e.input.cs_kind = CsKind::Endomorphism;
    e.input.matrix = block_J_strings(6);
    e.expected.betti = {1, 4, 8, 10, 8, 4, 1};
    e.expected.hodge = {{{1, 0}, 3}, {{0, 1}, 2}, {{3, 0}, 1}, {{0, 3}, 1},
                        {{3, 3}, 1}, {{3, 2}, 2}, {{2, 3}, 3}};
    e.expected.abelian_cs = false;
    e.expected.bi_invariant = true;
    e.expected.nilpotency_class = 2;
    e.expected.derham_formal = false;
    e.expected.dolbeault_formal = false;
    e.expected.zero_star_formal = false;
    e.expected.ddbar_overall = false;
    return e;
}

}  // namespace

std::vector<std::string> catalog_names() {
    return {"torus_c1", "torus_c2", "kodaira_thurston", "iwasawa"};
}

CatalogEntry catalog_entry(const std::string& name) {
    if (name == "torus_c1") return torus("torus_c1", 2);
    if (name == "torus_c2") return torus("torus_c2", 4);
    if (name == "kodaira_thurston") return kodaira_thurston();
    if (name == "iwasawa") return iwasawa();
    throw UnknownEntry(name);
}

}  // namespace nilcohom
