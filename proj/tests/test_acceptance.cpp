// Acceptance gate: ten top-level criteria, each backed by one or more
// library checks run with the default configuration. Prints one line per
// criterion and exits nonzero if any of them fails.
#include "nregular/suites.hpp"

#include <iostream>
#include <map>
#include <vector>

using namespace nregular;

int main() {
    SuiteConfig cfg; // n in {1,2,3}, l_max 3/2, seed 1
    std::map<std::string, Check> by_id;
    for (auto& c : build_checks(cfg)) by_id.emplace(c.id, std::move(c));

    struct Criterion {
        std::string label;
        std::vector<std::string> ids;
    };
    const std::vector<Criterion> criteria = {
        {"1 regularity of all four families (ranks 1-3, l <= 3/2)",
         {"basis.regularity.n1", "basis.regularity.n2", "basis.regularity.n3"}},
        {"2 operator identities on monomials of absolute degree <= 4",
         {"diffops.identities"}},
        {"3 slot Casimir sums vanish on symmetric tensors (ranks 2-4)",
         {"tensor.casimir.n2", "tensor.casimir.n3", "tensor.casimir.n4"}},
        {"4 complete orthogonality matrices with the alternating sign (ranks 1-3)",
         {"pairing.orthogonality.n1", "pairing.orthogonality.n2", "pairing.orthogonality.n3"}},
        {"5 exact reproducing integral at interior and exterior points (ranks 1-2)",
         {"reproduce.n1", "reproduce.n2"}},
        {"6 kernel expansions match Taylor data exactly plus a float spot check",
         {"kernel.expansion.n1", "kernel.expansion.n2", "kernel.expansion.float"}},
        {"7 degree-shift inversion and coefficient reconstruction on random inputs",
         {"diffops.dn.n1", "diffops.dn.n2", "diffops.dn.n3", "pairing.laurent"}},
        {"8 pairing invariance, conjugation intertwining and Gram definiteness",
         {"lie.invariance.n1", "lie.invariance.n2", "lie.sigma", "unitary.invariance.n1",
          "unitary.invariance.n2", "unitary.gram.n1", "unitary.gram.n2"}},
        {"9 block dimensions (2l+1)(2l+n+1) and generation in both directions",
         {"ktypes.dims.n1", "ktypes.dims.n2", "ktypes.dims.n3", "ktypes.generation"}},
        {"10 sphere moment table: exact entries and Monte Carlo agreement",
         {"kernel.moments", "kernel.moments.montecarlo"}},
    };

    int failures = 0;
    for (const auto& crit : criteria) {
        bool pass = true;
        std::string why;
        for (const auto& id : crit.ids) {
            auto it = by_id.find(id);
            if (it == by_id.end()) {
                pass = false;
                why = "missing check " + id;
                break;
            }
            CheckResult r;
            try {
                r = it->second.run();
            } catch (const std::exception& e) {
                r = {false, std::string("exception: ") + e.what()};
            }
            if (!r.pass) {
                pass = false;
                why = id + ": " + r.witness;
                break;
            }
        }
        std::cout << "criterion " << crit.label << ": " << (pass ? "PASS" : "FAIL") << "\n";
        if (!pass) {
            std::cout << "    " << why << "\n";
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
