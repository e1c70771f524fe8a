#include "skyline/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "skyline/classify.hpp"
#include "skyline/demazure.hpp"
#include "skyline/derivation.hpp"
#include "skyline/operators.hpp"

namespace skyline {

std::vector<Composition> compositions_up_to(int max_n, int max_part) {
    std::vector<Composition> out;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<int> parts(n, 0);
        while (true) {
            out.emplace_back(parts);
            int i = n - 1;
            while (i >= 0 && parts[i] == max_part) parts[i--] = 0;
            if (i < 0) break;
            ++parts[i];
        }
    }
    return out;
}

namespace {

nlohmann::json witness_filling(const Filling& f) { return {{"filling", to_json(f)}}; }

struct Battery {
    const Composition& alpha;
    const int n;
    const std::vector<Filling> fillings;
    const std::set<Filling> filling_set;
    VerificationReport report;

    explicit Battery(const Composition& a)
        : alpha(a),
          n(a.num_rows()),
          fillings(enumerate_ssf(a)),
          filling_set(fillings.begin(), fillings.end()) {
        report.alpha = a.parts();
    }

    void add(const std::string& name, bool pass, nlohmann::json witness = nullptr) {
        report.checks.push_back({name, pass, pass ? nullptr : std::move(witness)});
    }

    bool in_set(const Filling& f) const { return filling_set.count(f) != 0; }

    void enumeration_checks() {
        for (const Filling& f : fillings) {
            if (!validate_filling(f).ok || !check_non_attacking(f)) {
                add("enumeration_semistandard", false, witness_filling(f));
                break;
            }
        }
        if (!report.find("enumeration_semistandard"))
            add("enumeration_semistandard", true);

        bool ordered = true;
        for (std::size_t i = 1; i < fillings.size(); ++i)
            if (!(fillings[i - 1].reading_word() > fillings[i].reading_word())) {
                ordered = false;
                break;
            }
        add("enumeration_canonical_order", ordered);
        add("enumeration_deterministic", enumerate_ssf(alpha) == fillings);

        if (alpha.is_partition()) {
            bool ok = fillings.size() == 1 && fillings[0] == row_index_filling(alpha) &&
                      weight(fillings[0]).exponents() == alpha.parts();
            add("partition_base", ok);
        }

        // Leading rows up to the first ascent are forced.
        const int limit = first_ascent(alpha).value_or(n);
        bool forced = true;
        nlohmann::json forced_witness;
        for (const Filling& f : fillings) {
            for (int i = 1; i <= limit && forced; ++i)
                for (int v : f.row(i))
                    if (v != i) {
                        forced = false;
                        forced_witness = witness_filling(f);
                        break;
                    }
            if (auto r = first_ascent(alpha); r && forced) {
                for (int j = 1; j <= alpha.part(*r) && forced; ++j)
                    if (f.at(*r + 1, j) != *r + 1) {
                        forced = false;
                        forced_witness = witness_filling(f);
                    }
            }
            if (!forced) break;
        }
        add("leading_rows_forced", forced, std::move(forced_witness));
    }

    void key_checks() {
        Polynomial combinatorial = key_combinatorial(alpha);
        add("key_identity", key_recursive(alpha) == combinatorial);

        bool graded = true;
        const int degree = alpha.box_count();
        for (const auto& [e, c] : combinatorial.terms())
            if (c < 1 || e.total_degree() != degree) {
                graded = false;
                break;
            }
        add("weight_sum_graded", graded);
    }

    void operator_checks() {
        bool closure = true, round_trips = true, involution = true;
        bool weight_kept = true, frozen_kept = true, commutes = true;
        nlohmann::json witness;

        auto fail = [&](bool& flag, const Filling& f, int r, int t) {
            if (!flag) return;
            flag = false;
            if (witness.is_null())
                witness = {{"filling", to_json(f)}, {"row", r}, {"value", t}};
        };

        for (const Filling& f : fillings) {
            for (int t = 1; t <= n; ++t) {
                for (int r = t; r <= n; ++r)
                    if (!in_set(lower(f, r, t))) fail(closure, f, r, t);
                for (int r = t + 1; r <= n; ++r) {
                    if (!in_set(raise(f, r, t))) fail(closure, f, r, t);

                    Classification cls = classify(f, t);
                    if (cls.count_in_row(r, t + 1, EntryKind::Free, f) > 0 &&
                        raise(lower(f, r, t), r, t) != f)
                        fail(round_trips, f, r, t);
                    if (cls.count_in_row(r, t, EntryKind::Free, f) > 0 &&
                        lower(raise(f, r, t), r, t) != f)
                        fail(round_trips, f, r, t);

                    Filling image = phi(f, r, t);
                    if (phi(image, r, t) != f) fail(involution, f, r, t);
                    Classification icls = classify(image, t);
                    if (icls.count_in_row(r, t + 1, EntryKind::Free, image) !=
                            cls.count_in_row(r, t, EntryKind::Free, f) ||
                        icls.count_in_row(r, t, EntryKind::Free, image) !=
                            cls.count_in_row(r, t + 1, EntryKind::Free, f))
                        fail(involution, f, r, t);

                    ExponentVector wf = weight(f), wi = weight(image);
                    for (int v = 1; v <= n && weight_kept; ++v) {
                        if (v == t || v == t + 1) continue;
                        if (wf.exponent(v) != wi.exponent(v)) fail(weight_kept, f, r, t);
                    }
                    if (wf.exponent(t) + wf.exponent(t + 1) !=
                        wi.exponent(t) + wi.exponent(t + 1))
                        fail(weight_kept, f, r, t);

                    // paired cells keep their positions; pseudo-free cells keep
                    // positions, values and partners
                    auto frozen = [&](const Classification& c, const Filling& g) {
                        std::set<Cell> paired;
                        std::map<Cell, std::pair<int, Cell>> pseudo;
                        for (const auto& [cell, cls2] : c.cells()) {
                            if (cls2.kind == EntryKind::Paired) paired.insert(cell);
                            if (cls2.kind == EntryKind::PseudoFree)
                                pseudo[cell] = {g.entry(cell), *cls2.partner};
                        }
                        return std::make_pair(paired, pseudo);
                    };
                    if (frozen(cls, f) != frozen(icls, image)) fail(frozen_kept, f, r, t);

                    for (int r2 = t + 1; r2 < r; ++r2)
                        if (phi(phi(f, r, t), r2, t) != phi(phi(f, r2, t), r, t))
                            fail(commutes, f, r, t);
                }
            }
        }

        add("operator_closure", closure, witness);
        add("operator_round_trips", round_trips, witness);
        add("phi_involution", involution, witness);
        add("phi_weight_exchange", weight_kept, witness);
        add("phi_fixes_paired_and_pseudo_free", frozen_kept, witness);
        add("phi_commutativity", commutes, witness);
    }

    void classification_checks() {
        bool agree = true;
        nlohmann::json witness;
        for (const Filling& f : fillings)
            for (int t = 1; t <= n && agree; ++t)
                if (classify(f, t) != classify_fast(f, t)) {
                    agree = false;
                    witness = {{"filling", to_json(f)}, {"value", t}};
                }
        add("classification_agreement", agree, std::move(witness));
    }

    void phi_row_checks() {
        bool involution = true, order_free = true;
        nlohmann::json witness;
        for (const Filling& f : fillings)
            for (int r = 1; r < n; ++r) {
                if (phi_row(phi_row(f, r), r) != f && involution) {
                    involution = false;
                    witness = {{"filling", to_json(f)}, {"row", r}};
                }
                Filling descending = f;
                for (int i = n; i >= r + 1; --i) descending = phi(descending, i, r);
                if (descending != phi_row(f, r) && order_free) {
                    order_free = false;
                    witness = {{"filling", to_json(f)}, {"row", r}};
                }
            }
        add("phi_row_involution", involution, witness);
        add("phi_row_order_independent", order_free, witness);
    }

    void derivation_checks() {
        if (alpha.is_partition()) {
            add("inductive_generation", generate_ssf_inductively(alpha) == fillings);
            return;
        }
        const int r = *first_ascent(alpha);
        const Composition alpha_swapped = alpha.with_swapped_parts(r);

        for (const CheckResult& c : verify_pi_identity(alpha).checks)
            report.checks.push_back(c);

        bool partitioned = true, sizes = true;
        nlohmann::json witness;
        std::set<Filling> seen;
        for (const Filling& source : enumerate_ssf(alpha_swapped)) {
            DerivedFamily family = derived_fillings(source, alpha);
            int m = classify(source, r).count_in_row(r, r, EntryKind::Free, source);
            if (static_cast<int>(family.members.size()) != m + 1) {
                sizes = false;
                witness = witness_filling(source);
            }
            for (const Filling& member : family.members) {
                if (!in_set(member) || !seen.insert(member).second) {
                    partitioned = false;
                    witness = witness_filling(member);
                }
            }
        }
        if (seen.size() != fillings.size()) partitioned = false;
        add("derived_families_partition", partitioned, witness);
        add("derived_family_sizes", sizes, witness);

        bool inverse_ok = true;
        for (const Filling& f : fillings) {
            auto [source, k] = inverse_derived(f, alpha);
            DerivedFamily family = derived_fillings(source, alpha);
            if (k < 0 || k >= static_cast<int>(family.members.size()) ||
                family.members[k] != f) {
                inverse_ok = false;
                witness = witness_filling(f);
                break;
            }
        }
        add("inverse_derived_round_trip", inverse_ok, witness);

        add("inductive_generation", generate_ssf_inductively(alpha) == fillings);
    }

    void bender_knuth_checks() {
        for (int i = 1; i < n; ++i)
            if (alpha.part(i) > alpha.part(i + 1)) return;  // not weakly increasing
        bool ok = true;
        nlohmann::json witness;
        for (int t = 1; t < n && ok; ++t)
            for (int r = t + 1; r <= n && ok; ++r) {
                VerificationReport sub = bender_knuth_check(alpha, r, t);
                if (!sub.all_pass()) {
                    ok = false;
                    witness = to_json(sub);
                }
            }
        add("bender_knuth_specialization", ok, std::move(witness));
    }
};

}  // namespace

VerificationReport verify_composition(const Composition& alpha) {
    const auto start = std::chrono::steady_clock::now();
    Battery battery(alpha);
    battery.enumeration_checks();
    battery.key_checks();
    battery.operator_checks();
    battery.classification_checks();
    battery.phi_row_checks();
    battery.derivation_checks();
    battery.bender_knuth_checks();
    battery.report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - start)
                                    .count();
    return battery.report;
}

}  // namespace skyline
