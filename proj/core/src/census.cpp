#include "arcdiag/census.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "arcdiag/arc_number.hpp"
#include "arcdiag/obstruction.hpp"

#include "json.hpp"

namespace arcdiag {

namespace {

using ordered_json = nlohmann::ordered_json;

int resolve_threads(int threads) {
    if (threads > 0) {
        return threads;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void check_guard(int m, int guard, const char* what) {
    if (m > guard) {
        throw Error(ErrorKind::GuardExceeded, std::string(what) + " at m = " + std::to_string(m) +
                        " exceeds guard " + std::to_string(guard));
    }
}

/// Pairs the least unpaired point with every larger unpaired point,
/// ascending; `pairing` holds -1 on unpaired slots.
void enumerate_matchings(std::vector<int>& pairing, int from,
                         const std::function<void(const std::vector<int>&)>& fn) {
    const int n = static_cast<int>(pairing.size());
    int least = from;
    while (least < n && pairing[least] != -1) {
        ++least;
    }
    if (least == n) {
        fn(pairing);
        return;
    }
    for (int partner = least + 1; partner < n; ++partner) {
        if (pairing[partner] != -1) {
            continue;
        }
        pairing[least] = partner;
        pairing[partner] = least;
        enumerate_matchings(pairing, least + 1, fn);
        pairing[least] = -1;
        pairing[partner] = -1;
    }
}

CensusEntry build_entry(int m, const CanonicalCode& code, std::uint64_t orbit) {
    CensusEntry entry;
    entry.m = m;
    entry.code = code;
    entry.orbit = orbit;
    if (m == 0) {
        entry.arc = 1;
        return entry;
    }
    const ChordDiagram rep = diagram_of_code(code);
    entry.arc = arc_number(rep);
    for (int n = 1; 2 * n + 1 <= m && !entry.obstruction; ++n) {
        entry.obstruction = contains_obstruction(rep, n);
    }
    entry.star = m >= 3 && satisfies_star(rep);
    return entry;
}

std::map<CanonicalCode, std::uint64_t> orbit_counts(int m, int threads) {
    std::map<CanonicalCode, std::uint64_t> counts;
    if (m == 0) {
        counts[CanonicalCode{}] = 1;
        return counts;
    }
    threads = std::min(threads, 2 * m - 1);
    if (threads <= 1) {
        std::vector<int> pairing(2 * m, -1);
        enumerate_matchings(pairing, 0, [&](const std::vector<int>& p) {
            ++counts[canonical_code(ChordDiagram::from_pairing(p))];
        });
        return counts;
    }
    // Shards fix the partner of point 0; each is an independent sub-census
    // and the merge below is a plain sum, so the result cannot depend on
    // scheduling.
    std::vector<std::map<CanonicalCode, std::uint64_t>> partial(threads);
    std::atomic<int> next_shard{1};
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        workers.emplace_back([&, t] {
            std::vector<int> pairing(2 * m, -1);
            while (true) {
                const int partner = next_shard.fetch_add(1);
                if (partner >= 2 * m) {
                    break;
                }
                pairing[0] = partner;
                pairing[partner] = 0;
                enumerate_matchings(pairing, 1, [&](const std::vector<int>& p) {
                    ++partial[t][canonical_code(ChordDiagram::from_pairing(p))];
                });
                pairing[0] = -1;
                pairing[partner] = -1;
            }
        });
    }
    for (std::thread& worker : workers) {
        worker.join();
    }
    for (const auto& shard : partial) {
        for (const auto& [code, orbit] : shard) {
            counts[code] += orbit;
        }
    }
    return counts;
}

}  // namespace

std::uint64_t double_factorial(int m) {
    std::uint64_t product = 1;
    for (int k = 3; k <= 2 * m - 1; k += 2) {
        product *= static_cast<std::uint64_t>(k);
    }
    return product;
}

void for_each_matching(int m, const std::function<void(const ChordDiagram&)>& fn, int guard) {
    check_guard(m, guard, "matching enumeration");
    if (m == 0) {
        fn(ChordDiagram{});
        return;
    }
    std::vector<int> pairing(2 * m, -1);
    enumerate_matchings(pairing, 0,
                        [&](const std::vector<int>& p) { fn(ChordDiagram::from_pairing(p)); });
}

std::vector<ChordDiagram> all_matchings(int m, int guard) {
    std::vector<ChordDiagram> matchings;
    for_each_matching(m, [&](const ChordDiagram& d) { matchings.push_back(d); }, guard);
    return matchings;
}

std::vector<CensusEntry> classes(int m, int guard, int threads) {
    check_guard(m, guard, "census");
    const auto counts = orbit_counts(m, resolve_threads(threads));
    std::vector<CensusEntry> entries;
    entries.reserve(counts.size());
    for (const auto& [code, orbit] : counts) {
        entries.push_back(build_entry(m, code, orbit));
    }
    return entries;
}

std::vector<std::uint64_t> rotation_fixed_counts(int m, int guard) {
    check_guard(m, guard, "fixed-matching scan");
    std::vector<std::uint64_t> counts(2 * m, 0);
    for_each_matching(m, [&](const ChordDiagram& d) {
        const auto& pairing = d.pairing();
        const int n = d.point_count();
        for (int k = 0; k < n; ++k) {
            bool fixed = true;
            for (int i = 0; i < n && fixed; ++i) {
                fixed = pairing[(i + k) % n] == (pairing[i] + k) % n;
            }
            if (fixed) {
                ++counts[k];
            }
        }
    }, guard);
    return counts;
}

std::uint64_t burnside_count(int m, int guard) {
    if (m == 0) {
        return 1;
    }
    const auto counts = rotation_fixed_counts(m, guard);
    std::uint64_t total = 0;
    for (std::uint64_t c : counts) {
        total += c;
    }
    return total / static_cast<std::uint64_t>(2 * m);
}

std::string CensusEntry::to_json_line() const {
    ordered_json line;
    line["m"] = m;
    line["code"] = code.code;
    line["orbit"] = orbit;
    line["arc"] = arc;
    line["obstruction"] = obstruction;
    line["star"] = star;
    return line.dump();
}

TheoremReport verify_theorem(int m_max, int guard, int threads) {
    check_guard(m_max, guard, "theorem sweep");
    TheoremReport report;
    report.m_max = m_max;
    for (int m = 1; m <= m_max; ++m) {
        TheoremReport::PerM per;
        per.m = m;
        const std::vector<CensusEntry> entries = classes(m, std::max(m_max, 8), threads);
        per.class_count = entries.size();
        const auto note = [&](const std::string& what, const CanonicalCode& code) {
            std::ostringstream out;
            out << "m=" << m << " code=";
            for (size_t i = 0; i < code.code.size(); ++i) {
                out << (i ? "," : "") << code.code[i];
            }
            out << ": " << what;
            report.counterexamples.push_back(out.str());
        };
        for (const CensusEntry& entry : entries) {
            per.matchings += entry.orbit;
            ++per.arc_histogram[entry.arc];
            const ChordDiagram rep = diagram_of_code(entry.code);
            if (m <= 5 && arc_number_bruteforce(rep) != entry.arc) {
                note("greedy arc disagrees with the exhaustive oracle", entry.code);
            }
            const bool cutting = find_cutting_pair(rep).has_value();
            if (cutting != (entry.arc == 2)) {
                note("cutting pair presence does not match arc == 2", entry.code);
            }
            if (entry.obstruction != (entry.arc >= 3)) {
                note("obstruction containment does not match arc >= 3", entry.code);
            }
            if (is_minimal_obstruction(rep)) {
                const std::optional<int> n = is_c_odd(rep);
                if (!n) {
                    note("minimal obstruction outside the C_{2n+1} family", entry.code);
                }
                per.star_classes.emplace_back(entry.code, n.value_or(-1));
            }
        }
        if (per.matchings != double_factorial(m)) {
            note("orbit sizes do not sum to (2m-1)!!", CanonicalCode{});
        }
        if (per.class_count != burnside_count(m, std::max(m_max, 8))) {
            note("class count disagrees with the orbit-counting total", CanonicalCode{});
        }
        report.per_m.push_back(std::move(per));
    }
    return report;
}

std::vector<std::string> TheoremReport::to_lines() const {
    std::vector<std::string> lines;
    for (const PerM& per : per_m) {
        ordered_json line;
        line["m"] = per.m;
        line["matchings"] = per.matchings;
        line["classes"] = per.class_count;
        ordered_json histogram = ordered_json::object();
        for (const auto& [arc, count] : per.arc_histogram) {
            histogram[std::to_string(arc)] = count;
        }
        line["arc_histogram"] = histogram;
        ordered_json stars = ordered_json::array();
        for (const auto& [code, n] : per.star_classes) {
            ordered_json star;
            star["code"] = code.code;
            star["n"] = n;
            stars.push_back(star);
        }
        line["star_classes"] = stars;
        lines.push_back(line.dump());
    }
    ordered_json summary;
    summary["m_max"] = m_max;
    summary["counterexamples"] = counterexamples;
    lines.push_back(summary.dump());
    return lines;
}

LemmaReport verify_lemmas(int m_max, int guard) {
    LemmaReport report;
    report.m_max = m_max;
    const auto violation = [&](int m, const CanonicalCode& code, std::string what) {
        report.violations.push_back(LemmaReport::Violation{m, code, std::move(what)});
    };
    for (int m = 3; m <= m_max; ++m) {
        for (const CensusEntry& entry : classes(m, guard)) {
            const ChordDiagram rep = diagram_of_code(entry.code);
            if (!is_minimal_obstruction(rep)) {
                continue;
            }
            ++report.star_classes_checked;
            if (m % 2 == 0) {
                violation(m, entry.code, "minimal obstruction with an even chord count");
            }
            const int points = rep.point_count();
            for (const Chord& c : rep.chords()) {
                const int length = chord_length(rep, c);
                if (length > m - 2) {
                    violation(m, entry.code, "chord length above m - 2");
                }
                if (length < m - 2) {
                    violation(m, entry.code, "chord length below m - 2");
                }
                // Cutting pairs of the deletion must not separate c's
                // endpoints, else the original diagram would have arc 2.
                const ChordDiagram rest = delete_chord(rep, c);
                std::vector<int> kept;
                kept.reserve(points - 2);
                for (int p = 0; p < points; ++p) {
                    if (p != c.a && p != c.b) {
                        kept.push_back(p);
                    }
                }
                const int rest_points = rest.point_count();
                for (int i = 0; i < rest_points / 2; ++i) {
                    const ArcPartition cuts{{i, i + rest_points / 2}};
                    if (!is_valid_partition(rest, cuts)) {
                        continue;
                    }
                    // Every original gap between the kept points around each
                    // cut must leave c unsplit.
                    const auto run = [&](int gap) {
                        std::vector<int> gaps;
                        const int from = kept[gap];
                        const int to = kept[(gap + 1) % rest_points];
                        for (int g = from; g != to; g = (g + 1) % points) {
                            gaps.push_back(g);
                        }
                        return gaps;
                    };
                    for (int g1 : run(i)) {
                        for (int g2 : run(i + rest_points / 2)) {
                            const int span = (g2 - g1 + points) % points;
                            const bool a_in = (c.a - g1 - 1 + points) % points < span;
                            const bool b_in = (c.b - g1 - 1 + points) % points < span;
                            if (a_in != b_in) {
                                violation(m, entry.code,
                                          "a cutting pair of the deletion separates the deleted "
                                          "chord's endpoints");
                            }
                        }
                    }
                }
            }
        }
    }
    return report;
}

std::vector<std::string> LemmaReport::to_lines() const {
    std::vector<std::string> lines;
    ordered_json summary;
    summary["m_max"] = m_max;
    summary["star_classes_checked"] = star_classes_checked;
    summary["violations"] = violations.size();
    lines.push_back(summary.dump());
    for (const Violation& v : violations) {
        ordered_json line;
        line["m"] = v.m;
        line["code"] = v.code.code;
        line["violation"] = v.what;
        lines.push_back(line.dump());
    }
    return lines;
}

}  // namespace arcdiag
