#include <algorithm>
#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "meanconvex/catalog.hpp"

using namespace meanconvex;

namespace {

const AuditFinding& find(const std::vector<AuditFinding>& fs, const std::string& id) {
    auto it = std::find_if(fs.begin(), fs.end(), [&](const AuditFinding& f) { return f.entry == id; });
    if (it == fs.end()) throw std::runtime_error("no finding " + id);
    return *it;
}

const std::vector<AuditFinding>& full_audit() {
    static const std::vector<AuditFinding> fs = run_audit();
    return fs;
}

} // namespace

TEST(Functions, Builtins) {
    auto fs = builtin_functions();
    EXPECT_EQ(fs.size(), 16u);
    PointFunction c = parse_function("cosh");
    EXPECT_TRUE(c.positive_on_domain);
    EXPECT_FALSE(c.domain.bounded());
    PointFunction a = parse_function("arcsin");
    EXPECT_EQ(a.domain.hi, 1.0);
    EXPECT_GT(a.domain.lo, 0.0);
    EXPECT_FALSE(a.note.empty());
    EXPECT_DOUBLE_EQ(parse_function("reciprocal")(4.0), 0.25);
    EXPECT_DOUBLE_EQ(parse_function("affine:2,1")(3.0), 7.0);
    EXPECT_DOUBLE_EQ(parse_function("power:3")(2.0), 8.0);
    EXPECT_THROW(parse_function("affine:2"), domain_error);
    EXPECT_THROW(parse_function("power:x"), domain_error);
    EXPECT_THROW(parse_function("nothing"), domain_error);
}

TEST(Functions, NaturalDomainIsEnforced) {
    EXPECT_THROW(fn_log().at(-1.0), domain_error);
    EXPECT_THROW(fn_log().log_at(0.5), evaluation_error);
    EXPECT_NEAR(fn_cosh().log_at(800.0), 800.0 - std::log(2.0), 1e-9);
}

TEST(Catalog, Shape) {
    auto cs = builtin_claims();
    EXPECT_GE(cs.size(), 24u);
    std::set<std::string> ids;
    std::size_t equality = 0, suspect = 0;
    for (const auto& c : cs) {
        EXPECT_TRUE(ids.insert(c.id).second) << "duplicate " << c.id;
        EXPECT_FALSE(c.checks.empty()) << c.id;
        EXPECT_FALSE(c.source.empty()) << c.id;
        bool any_primary = std::any_of(c.checks.begin(), c.checks.end(), [](const Check& k) { return k.primary; });
        if (c.id != "arcsin-AG-one") EXPECT_TRUE(any_primary) << c.id;
        equality += c.group == "equality-families";
        suspect += c.expected == Expected::suspect;
    }
    EXPECT_EQ(equality, 7u);
    EXPECT_GT(suspect, 5u);
}

TEST(Catalog, EveryTheoremHasAnExample) {
    std::set<std::string> seen;
    for (const auto& c : builtin_claims())
        if (c.group == "examples")
            for (const auto& k : c.checks)
                if (k.label.rfind("theorem ", 0) == 0) seen.insert(k.label.substr(8, 2));
    for (TheoremId id : all_theorems) EXPECT_TRUE(seen.count(to_string(id))) << to_string(id);
}

TEST(Audit, EqualityFamiliesConfirmed) {
    auto fs = run_audit({}, default_tol, "equality-families");
    ASSERT_EQ(fs.size(), 7u);
    for (const auto& f : fs) {
        EXPECT_EQ(f.verdict, FindingVerdict::confirmed) << f.entry;
        EXPECT_GE(f.min_margin, -1e-9) << f.entry;
    }
}

TEST(Audit, KnownFindings) {
    const auto& fs = full_audit();
    EXPECT_EQ(find(fs, "cosh-AG-identity").verdict, FindingVerdict::confirmed);
    EXPECT_EQ(find(fs, "power-AA-identity").verdict, FindingVerdict::confirmed);
    EXPECT_EQ(find(fs, "hlawka").verdict, FindingVerdict::confirmed);
    EXPECT_EQ(find(fs, "nonexistence-reciprocal").verdict, FindingVerdict::confirmed);

    const auto& neg = find(fs, "neg-square-GA-reciprocal");
    EXPECT_EQ(neg.verdict, FindingVerdict::domain_violation);
    ASSERT_TRUE(neg.witness);
    EXPECT_LE(neg.witness->lhs, 0.0);

    const auto& gg = find(fs, "exp-GG-equality");
    EXPECT_EQ(gg.verdict, FindingVerdict::refuted);
    ASSERT_TRUE(gg.witness);
    EXPECT_EQ(find(fs, "exp-AG-equality").verdict, FindingVerdict::confirmed);

    EXPECT_EQ(find(fs, "am-gm-hm-identity").verdict, FindingVerdict::confirmed);
    EXPECT_EQ(find(fs, "am-gm-hm-power:2").verdict, FindingVerdict::refuted);
    EXPECT_EQ(find(fs, "power-table-superadditive").verdict, FindingVerdict::refuted);
    EXPECT_EQ(find(fs, "ordering-reciprocal-AH").verdict, FindingVerdict::refuted);
}

TEST(Audit, RefutedFindingsCarryWitnesses) {
    for (const auto& f : full_audit()) {
        if (f.verdict == FindingVerdict::refuted || f.verdict == FindingVerdict::domain_violation)
            EXPECT_TRUE(f.witness) << f.entry;
        if (f.verdict == FindingVerdict::refuted) {
            bool primary_refuted = std::any_of(f.checks.begin(), f.checks.end(), [](const CheckOutcome& o) {
                return o.primary && o.state == CheckState::refuted;
            });
            EXPECT_TRUE(primary_refuted) << f.entry;
        }
    }
}

TEST(Audit, MissingRelationTestedBothWays) {
    const auto& f = find(full_audit(), "arcsin-AG-one");
    int both = 0;
    for (const auto& o : f.checks)
        if (o.label.rfind("printed", 0) == 0) {
            EXPECT_FALSE(o.primary);
            ++both;
        }
    EXPECT_EQ(both, 2);
}

TEST(Audit, PrintedAndParentFormsBothReported) {
    const auto& f = find(full_audit(), "square-HA-reciprocal");
    bool printed = false, parent = false;
    for (const auto& o : f.checks) {
        if (o.label.find("1/18") != std::string::npos) printed = true;
        if (o.label.rfind("theorem HA", 0) == 0) parent = true;
    }
    EXPECT_TRUE(printed);
    EXPECT_TRUE(parent);
}

TEST(Audit, OnlyFilters) {
    auto s = run_audit({}, default_tol, "suspect");
    EXPECT_FALSE(s.empty());
    for (const auto& f : s) EXPECT_EQ(f.expected, Expected::suspect);
    auto one = run_audit({}, default_tol, "hlawka");
    ASSERT_EQ(one.size(), 1u);
    EXPECT_TRUE(run_audit({}, default_tol, "no-such-entry").empty());
}

TEST(Audit, Deterministic) {
    auto a = run_audit({}, default_tol, "examples");
    auto b = run_audit({}, default_tol, "examples");
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].verdict, b[i].verdict);
        EXPECT_EQ(std::isnan(a[i].min_margin), std::isnan(b[i].min_margin));
        if (!std::isnan(a[i].min_margin)) EXPECT_EQ(a[i].min_margin, b[i].min_margin);
        EXPECT_EQ(a[i].checks.size(), b[i].checks.size());
    }
}
