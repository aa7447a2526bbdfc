#include "hookswap/enumeration.hpp"

#include "hookswap/bijections.hpp"
#include "hookswap/qseries.hpp"
#include "hookswap/rimhook.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hookswap {

namespace {

void extend(int remaining, int max_part, const PartBounds& b, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.push_back(Partition::trusted(prefix));
        return;
    }
    if (prefix.size() >= b.max_length)
        return;
    for (int k = std::min(remaining, max_part); k >= b.min_part; --k) {
        prefix.push_back(k);
        extend(remaining - k, k, b, prefix, out);
        prefix.pop_back();
    }
}

bool pointed_less(const PointedPartition& x, const PointedPartition& y)
{
    if (x.partition() != y.partition())
        return x.partition() < y.partition();
    return x.cell() < y.cell();
}

std::string describe(const PointedPartition& pp)
{
    return "((" + to_string(pp.partition()) + "), (" + to_string(pp.cell()) + "))";
}

std::string describe(const StatTuple& s)
{
    return "(a,l,m)=(" + std::to_string(s.arm) + "," + std::to_string(s.leg) + "," + std::to_string(s.coarm) + ")";
}

std::string key_string(const std::vector<int>& key)
{
    std::string out = "(";
    for (std::size_t i = 0; i < key.size(); ++i)
        out += (i ? "," : "") + std::to_string(key[i]);
    return out + ")";
}

std::uint64_t lookup(const Counts& counts, const std::vector<int>& key)
{
    const auto it = counts.find(key);
    return it == counts.end() ? 0 : it->second;
}

} // namespace

std::vector<Partition> partitions_of(int n, PartBounds bounds)
{
    std::vector<Partition> out;
    if (n < 0)
        return out;
    bounds.min_part = std::max(bounds.min_part, 1);
    std::vector<int> prefix;
    extend(n, bounds.max_part, bounds, prefix, out);
    return out;
}

std::vector<PointedPartition> pointed_partitions_of(int n)
{
    std::vector<PointedPartition> out;
    for (const auto& p : partitions_of(n))
        for (std::size_t y = 1; y <= p.length(); ++y)
            for (int x = 1; x <= p.part(y); ++x)
                out.emplace_back(p, Cell{x, static_cast<int>(y)});
    return out;
}

std::uint64_t DistTable::count(const std::vector<int>& key) const { return lookup(counts, key); }

std::uint64_t DistTable::total() const
{
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0},
                           [](std::uint64_t acc, const auto& kv) { return acc + kv.second; });
}

std::string DistTable::to_tsv() const
{
    std::ostringstream os;
    for (const auto& col : stat_key_columns(kind))
        os << col << '\t';
    os << "count\n";
    for (const auto& [key, c] : counts) {
        for (int v : key)
            os << v << '\t';
        os << c << '\n';
    }
    return os.str();
}

std::string DistTable::to_json() const
{
    const auto cols = stat_key_columns(kind);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& [key, c] : counts) {
        nlohmann::ordered_json row;
        for (std::size_t i = 0; i < cols.size(); ++i)
            row[cols[i]] = key[i];
        row["count"] = c;
        rows.push_back(std::move(row));
    }
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["kind"] = to_string(kind);
    doc["columns"] = cols;
    doc["rows"] = std::move(rows);
    return doc.dump();
}

DistTable distribution(int n, StatKey kind, Exec exec)
{
    const auto items = pointed_partitions_of(n);
    return DistTable{n, kind, tally(items, kind, exec)};
}

std::uint64_t f_count(int n, int a, int l, int m)
{
    std::uint64_t count = 0;
    for (const auto& pp : pointed_partitions_of(n)) {
        const StatTuple s = stats(pp);
        count += (s.arm == a && s.leg == l && s.coarm == m) ? 1 : 0;
    }
    return count;
}

void VerifyReport::fail(std::string what, std::size_t cap)
{
    passed = false;
    if (failures.size() < cap)
        failures.push_back(std::move(what));
}

std::string VerifyReport::summary() const
{
    std::string out = std::string(passed ? "PASS " : "FAIL ") + check_name + " [" + range + "] checked="
                      + std::to_string(checked);
    for (const auto& f : failures)
        out += "\n  counterexample: " + f;
    return out;
}

VerifyReport verify_involution(int n_max, const VerifyOptions& opt)
{
    VerifyReport rep{"involution", "n<=" + std::to_string(n_max)};
    for (int n = 0; n <= n_max; ++n) {
        const auto items = pointed_partitions_of(n);
        const MapResult first = map_phi(items, opt.exec);
        std::vector<PointedPartition> images;
        std::vector<std::size_t> source;
        for (std::size_t i = 0; i < items.size(); ++i) {
            ++rep.checked;
            if (!first.images[i]) {
                rep.fail(describe(items[i]) + ": phi threw: " + first.errors[i], opt.max_failures);
                continue;
            }
            const PointedPartition& img = *first.images[i];
            const StatTuple s = stats(items[i]);
            const StatTuple t = stats(img);
            if (img.partition().weight() != n)
                rep.fail(describe(items[i]) + ": image " + describe(img) + " has a different weight", opt.max_failures);
            if (t.arm != s.arm || t.leg != s.coarm || t.coarm != s.leg || t.hook != s.part_len || t.part_len != s.hook)
                rep.fail(describe(items[i]) + " " + describe(s) + ": image " + describe(img) + " has " + describe(t),
                         opt.max_failures);
            images.push_back(img);
            source.push_back(i);
        }
        const MapResult second = map_phi(images, opt.exec);
        for (std::size_t k = 0; k < images.size(); ++k) {
            const auto& orig = items[source[k]];
            if (!second.images[k])
                rep.fail(describe(images[k]) + ": phi threw: " + second.errors[k], opt.max_failures);
            else if (!(*second.images[k] == orig))
                rep.fail(describe(orig) + ": phi(phi) = " + describe(*second.images[k]), opt.max_failures);
        }
    }
    return rep;
}

VerifyReport verify_symmetry(int n_max, const VerifyOptions& opt)
{
    VerifyReport rep{"symmetry", "n<=" + std::to_string(n_max)};
    for (int n = 0; n <= n_max; ++n) {
        const auto items = pointed_partitions_of(n);
        const Counts alm = tally(items, StatKey::alm, opt.exec);
        for (const auto& [key, c] : alm) {
            ++rep.checked;
            const std::vector<int> swapped{key[0], key[2], key[1]};
            if (lookup(alm, swapped) != c)
                rep.fail("n=" + std::to_string(n) + ": f" + key_string(key) + "=" + std::to_string(c) + " but f"
                             + key_string(swapped) + "=" + std::to_string(lookup(alm, swapped)),
                         opt.max_failures);
        }
        const Counts hp = tally(items, StatKey::hp, opt.exec);
        for (const auto& [key, c] : hp) {
            ++rep.checked;
            const std::vector<int> swapped{key[1], key[0]};
            if (lookup(hp, swapped) != c)
                rep.fail("n=" + std::to_string(n) + ": (h,p)" + key_string(key) + " count " + std::to_string(c)
                             + " differs from " + key_string(swapped),
                         opt.max_failures);
        }
        std::uint64_t expected_total = 0;
        for (const auto& p : partitions_of(n))
            expected_total += static_cast<std::uint64_t>(p.weight());
        if (items.size() != expected_total)
            rep.fail("n=" + std::to_string(n) + ": |F_n| = " + std::to_string(items.size()) + " but sum of weights is "
                         + std::to_string(expected_total),
                     opt.max_failures);
    }
    return rep;
}

VerifyReport verify_supersymmetry(int n_max, const VerifyOptions& opt)
{
    VerifyReport rep{"supersymmetry", "n<=" + std::to_string(n_max)};
    for (int n = 0; n <= n_max; ++n) {
        const auto items = pointed_partitions_of(n);
        const Counts am = tally(items, StatKey::am, opt.exec);
        const Counts al = tally(items, StatKey::al, opt.exec);
        if (am != al)
            rep.fail("n=" + std::to_string(n) + ": (a,m) and (a,l) tables differ", opt.max_failures);
        for (const auto* table : {&am, &al}) {
            const char* name = table == &am ? "(a,m)" : "(a,l)";
            for (int sum = 0; sum < std::max(n, 1); ++sum) {
                const std::uint64_t first = lookup(*table, {0, sum});
                for (int x = 1; x <= sum; ++x) {
                    ++rep.checked;
                    const std::uint64_t here = lookup(*table, {x, sum - x});
                    if (here != first)
                        rep.fail("n=" + std::to_string(n) + ": " + name + " count at " + key_string({x, sum - x}) + " is "
                                     + std::to_string(here) + " but at " + key_string({0, sum}) + " is "
                                     + std::to_string(first),
                                 opt.max_failures);
                }
            }
        }
    }
    return rep;
}

VerifyReport verify_zeta(int n_max, int sum_max, const VerifyOptions& opt)
{
    VerifyReport rep{"zeta", "n<=" + std::to_string(n_max) + " arm+leg<=" + std::to_string(sum_max)};
    for (int n = 0; n <= n_max; ++n) {
        const auto items = pointed_partitions_of(n);
        std::map<std::pair<int, int>, std::vector<PointedPartition>> by_arm_leg;
        for (const auto& pp : items) {
            const StatTuple s = stats(pp);
            if (s.arm + s.leg <= sum_max)
                by_arm_leg[{s.arm, s.leg}].push_back(pp);
        }
        const auto members = [&](int arm, int leg) -> const std::vector<PointedPartition>& {
            static const std::vector<PointedPartition> none;
            const auto it = by_arm_leg.find({arm, leg});
            return it == by_arm_leg.end() ? none : it->second;
        };
        for (int sum = 0; sum <= sum_max; ++sum) {
            for (int arm = 0; arm <= sum; ++arm) {
                for (int arm2 = 0; arm2 <= sum; ++arm2) {
                    const int leg = sum - arm;
                    const int leg2 = sum - arm2;
                    const auto& src = members(arm, leg);
                    const std::string tag = "n=" + std::to_string(n) + " (" + std::to_string(arm) + ","
                                            + std::to_string(leg) + ")->(" + std::to_string(arm2) + ","
                                            + std::to_string(leg2) + ")";
                    ++rep.checked;
                    if (src.size() != members(arm2, leg2).size())
                        rep.fail(tag + ": |F_n(arm,leg,*)| = " + std::to_string(src.size()) + " but target has "
                                     + std::to_string(members(arm2, leg2).size()),
                                 opt.max_failures);
                    const MapResult fwd = map_zeta(src, arm2, leg2, opt.exec);
                    std::vector<PointedPartition> images;
                    std::vector<std::size_t> origin;
                    for (std::size_t i = 0; i < src.size(); ++i) {
                        if (!fwd.images[i]) {
                            rep.fail(tag + " " + describe(src[i]) + ": zeta threw: " + fwd.errors[i], opt.max_failures);
                            continue;
                        }
                        const auto& img = *fwd.images[i];
                        const StatTuple t = stats(img);
                        if (t.arm != arm2 || t.leg != leg2 || img.partition().weight() != n)
                            rep.fail(tag + " " + describe(src[i]) + ": image " + describe(img) + " lands in "
                                         + describe(t),
                                     opt.max_failures);
                        images.push_back(img);
                        origin.push_back(i);
                    }
                    const MapResult back = map_zeta(images, arm, leg, opt.exec);
                    for (std::size_t i = 0; i < images.size(); ++i)
                        if (!back.images[i] || !(*back.images[i] == src[origin[i]]))
                            rep.fail(tag + " " + describe(images[i]) + ": reverse zeta does not return to the source",
                                     opt.max_failures);
                    std::sort(images.begin(), images.end(), pointed_less);
                    if (std::adjacent_find(images.begin(), images.end()) != images.end())
                        rep.fail(tag + ": zeta is not injective", opt.max_failures);
                }
            }
        }
    }
    return rep;
}

VerifyReport verify_gf(int a_max, int l_max, int m_max, int n_max, const VerifyOptions& opt)
{
    VerifyReport rep{"gf", "a<=" + std::to_string(a_max) + " l<=" + std::to_string(l_max) + " m<="
                               + std::to_string(m_max) + " n<=" + std::to_string(n_max)};
    std::vector<Counts> tables;
    for (int n = 0; n <= n_max; ++n)
        tables.push_back(tally(pointed_partitions_of(n), StatKey::alm, opt.exec));
    for (int a = 0; a <= a_max; ++a) {
        for (int l = 0; l <= l_max; ++l) {
            for (int m = 0; m <= m_max; ++m) {
                const QSeries gf = gf_f(a, l, m, n_max);
                for (int n = 0; n <= n_max; ++n) {
                    ++rep.checked;
                    const std::uint64_t brute = lookup(tables[static_cast<std::size_t>(n)], {a, l, m});
                    if (gf[n] < 0 || static_cast<std::uint64_t>(gf[n]) != brute)
                        rep.fail("f_" + std::to_string(n) + key_string({a, l, m}) + ": series " + std::to_string(gf[n])
                                     + " vs enumeration " + std::to_string(brute),
                                 opt.max_failures);
                }
            }
        }
    }
    return rep;
}

VerifyReport verify_pealing(int n_max, int a_max, int m_max, const VerifyOptions& opt)
{
    VerifyReport rep{"pealing", "n<=" + std::to_string(n_max) + " a<=" + std::to_string(a_max) + " m<="
                                    + std::to_string(m_max)};
    for (int a = 0; a <= a_max; ++a) {
        for (int m = 0; m <= m_max; ++m) {
            const std::string ctx = "a=" + std::to_string(a) + " m=" + std::to_string(m);
            // reduced shapes (<= a parts, each <= m) and hook-length multisets
            // (parts in [a+1, a+m]) counted by weight
            std::vector<std::vector<Partition>> reduced(static_cast<std::size_t>(n_max) + 1);
            std::vector<std::vector<Partition>> hooks(static_cast<std::size_t>(n_max) + 1);
            for (int w = 0; w <= n_max; ++w) {
                reduced[static_cast<std::size_t>(w)] =
                    partitions_of(w, PartBounds{m, 1, static_cast<std::size_t>(a)});
                hooks[static_cast<std::size_t>(w)] =
                    m == 0 ? (w == 0 ? std::vector<Partition>{Partition{}} : std::vector<Partition>{})
                           : partitions_of(w, PartBounds{a + m, a + 1});
            }
            for (int n = 0; n <= n_max; ++n) {
                const auto items = partitions_of(n, PartBounds{m});
                const SweepResult sweep = peal_roundtrip(items, a, m, opt.exec);
                for (const auto& msg : sweep) {
                    ++rep.checked;
                    if (!msg.empty())
                        rep.fail(msg, opt.max_failures);
                }

                std::uint64_t pairs = 0;
                for (int w = 0; w <= n; ++w) {
                    const auto& shapes = reduced[static_cast<std::size_t>(w)];
                    const auto& seqs = hooks[static_cast<std::size_t>(n - w)];
                    pairs += shapes.size() * seqs.size();
                    for (const auto& shape : shapes) {
                        for (const auto& seq : seqs) {
                            ++rep.checked;
                            const std::vector<int> rs(seq.vec().rbegin(), seq.vec().rend());
                            try {
                                const Partition A = unpeal(shape, rs, a, m);
                                const PealingResult again = peal(A, a, m);
                                if (again.reduced != shape || again.hook_lengths != rs)
                                    rep.fail(ctx + " reduced=(" + to_string(shape) + ") r=(" + to_string(seq)
                                                 + "): peal(unpeal) differs",
                                             opt.max_failures);
                            } catch (const std::exception& e) {
                                rep.fail(ctx + " reduced=(" + to_string(shape) + "): " + e.what(), opt.max_failures);
                            }
                        }
                    }
                }
                if (pairs != items.size())
                    rep.fail(ctx + " n=" + std::to_string(n) + ": " + std::to_string(items.size())
                                 + " partitions but " + std::to_string(pairs) + " (reduced, r) pairs",
                             opt.max_failures);
            }
        }
    }
    return rep;
}

VerifyReport verify_remark(int a_max, int m_max, int max_degree, const VerifyOptions& opt)
{
    VerifyReport rep{"remark", "a<=" + std::to_string(a_max) + " m<=" + std::to_string(m_max) + " N="
                                   + std::to_string(max_degree)};
    for (int a = 0; a <= a_max; ++a) {
        for (int m = 0; m <= m_max; ++m) {
            ++rep.checked;
            const QSeries gap = remark_identity_gap(a, m, max_degree);
            if (!gap.is_zero())
                rep.fail("a=" + std::to_string(a) + " m=" + std::to_string(m) + ": gap = " + gap.to_string(),
                         opt.max_failures);
        }
    }
    return rep;
}

} // namespace hookswap
