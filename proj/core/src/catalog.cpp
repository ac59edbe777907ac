#include "bazaikin/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace bazaikin {

namespace {

int positive_entries(const SixTuple& r) {
    return static_cast<int>(std::count_if(r.r.begin(), r.r.end(),
                                          [](std::int64_t v) { return v > 0; }));
}

std::int64_t floor_odd_sqrt(std::int64_t v) {
    if (v < 1) return -1;
    auto m = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (m * m > v) --m;
    while ((m + 1) * (m + 1) <= v) ++m;
    if (m % 2 == 0) --m;
    return m;
}

// Candidate six-tuples with leading entry r1, descending, zero-sum,
// sum of squares <= sos_max, already in canonical sign form.
void scan_partition(std::int64_t r1, std::int64_t sos_max,
                    std::vector<CatalogRecord>& out) {
    std::array<std::int64_t, 6> t{};
    t[0] = r1;

    auto emit = [&] {
        const SixTuple six{t};
        SixTuple negated;
        for (std::size_t i = 0; i < 6; ++i) negated[i] = -six[5 - i];
        if (six < negated) return;  // the negation's sorted form is the canonical one
        const FiveTuple rep = normalize(delete_entry(six, 5));
        if (!is_admissible(rep)) {
#ifndef NDEBUG
            // Freeness must not depend on which entry is deleted; a
            // disagreement would silently drop a class, so fail loudly.
            for (std::size_t i = 0; i < 5; ++i) {
                if (is_admissible(normalize(delete_entry(six, i)))) {
                    std::fprintf(stderr,
                                 "deletion-dependent admissibility for %s (deletion %zu)\n",
                                 to_string(six).c_str(), i);
                    std::abort();
                }
            }
#endif
            return;
        }
        out.push_back(make_record(CanonicalClass{six}));
    };

    // Depth-first over r2..r5; each level k leaves 6-k entries, each
    // contributing at least 1 to the sum of squares.
    auto rec = [&](auto&& self, int level, std::int64_t sos, std::int64_t sum) -> void {
        if (level == 5) {
            const std::int64_t r6 = -sum;
            if (r6 <= t[4] && sos + r6 * r6 <= sos_max) {
                t[5] = r6;
                emit();
            }
            return;
        }
        const std::int64_t budget = sos_max - sos - (5 - level);
        const std::int64_t mag = floor_odd_sqrt(budget);
        if (mag < 1) return;
        for (std::int64_t v = std::min(t[level - 1], mag); v >= -mag; v -= 2) {
            t[level] = v;
            self(self, level + 1, sos + v * v, sum + v);
        }
    };
    rec(rec, 1, r1 * r1, r1);
}

struct RecordKey {
    std::int64_t p1;
    SixTuple canon;
    bool operator<(const RecordKey& o) const {
        return p1 != o.p1 ? p1 < o.p1 : canon < o.canon;
    }
};

RecordKey key_of(const CatalogRecord& r) { return {r.p1, r.canon.canon}; }

std::string reps_field(const std::vector<FiveTuple>& reps) {
    std::string s;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (i) s += '|';
        for (std::size_t j = 0; j < 5; ++j) {
            if (j) s += ' ';
            s += std::to_string(reps[i][j]);
        }
    }
    return s;
}

std::string canon_field(const SixTuple& r) {
    std::string s;
    for (std::size_t i = 0; i < 6; ++i) {
        if (i) s += ' ';
        s += std::to_string(r[i]);
    }
    return s;
}

void check_record(const CatalogRecord& rec, std::size_t line) {
    std::int64_t sos = 0;
    for (std::size_t i = 0; i < 6; ++i) sos += rec.canon.canon[i] * rec.canon.canon[i];
    if (2 * rec.p1 != sos) {
        throw ParseError("2*p1 = " + std::to_string(2 * rec.p1) +
                             " does not match sum of squares " + std::to_string(sos),
                         line);
    }
    if (rec.s <= 0 || rec.p2 < 0 || (rec.s > 1 && rec.p2 >= rec.s)) {
        throw ParseError("p2 out of range for s", line);
    }
}

std::vector<std::int64_t> parse_int_list(const std::string& text, char sep, std::size_t line) {
    std::vector<std::int64_t> out;
    std::istringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, sep)) {
        if (piece.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(piece, &used));
            if (used != piece.size()) throw std::invalid_argument(piece);
        } catch (const std::exception&) {
            throw ParseError("bad integer '" + piece + "'", line);
        }
    }
    return out;
}

CatalogRecord record_from_csv(const std::string& line_text, std::size_t line) {
    std::vector<std::string> fields;
    std::istringstream ss(line_text);
    std::string field;
    while (std::getline(ss, field, ';')) fields.push_back(field);
    if (fields.size() != 7) {
        throw ParseError("expected 7 fields, got " + std::to_string(fields.size()), line);
    }
    CatalogRecord rec;
    const auto canon = parse_int_list(fields[0], ' ', line);
    if (canon.size() != 6) throw ParseError("canon needs 6 entries", line);
    std::copy(canon.begin(), canon.end(), rec.canon.canon.r.begin());
    try {
        rec.p1 = std::stoll(fields[1]);
        rec.s = std::stoll(fields[2]);
        rec.p2 = std::stoll(fields[3]);
    } catch (const std::exception&) {
        throw ParseError("bad integer field", line);
    }
    try {
        rec.curvature = curvature_from_code(fields[4]);
    } catch (const InvalidInput& e) {
        throw ParseError(e.what(), line);
    }
    if (fields[5] != "true" && fields[5] != "false") {
        throw ParseError("new_example must be true|false", line);
    }
    rec.new_example = fields[5] == "true";
    std::istringstream groups(fields[6]);
    std::string group;
    while (std::getline(groups, group, '|')) {
        const auto vals = parse_int_list(group, ' ', line);
        if (vals.size() != 5) throw ParseError("rep needs 5 entries", line);
        FiveTuple rep;
        std::copy(vals.begin(), vals.end(), rep.q.begin());
        rec.reps.push_back(rep);
    }
    check_record(rec, line);
    return rec;
}

CatalogRecord record_from_json(const std::string& line_text, std::size_t line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what(), line);
    }
    CatalogRecord rec;
    try {
        const auto canon = j.at("canon").get<std::vector<std::int64_t>>();
        if (canon.size() != 6) throw ParseError("canon needs 6 entries", line);
        std::copy(canon.begin(), canon.end(), rec.canon.canon.r.begin());
        rec.p1 = j.at("p1").get<std::int64_t>();
        rec.s = j.at("s").get<std::int64_t>();
        rec.p2 = j.at("p2").get<std::int64_t>();
        rec.curvature = curvature_from_code(j.at("curvature").get<std::string>());
        rec.new_example = j.at("new_example").get<bool>();
        for (const auto& rep_json : j.at("reps")) {
            const auto vals = rep_json.get<std::vector<std::int64_t>>();
            if (vals.size() != 5) throw ParseError("rep needs 5 entries", line);
            FiveTuple rep;
            std::copy(vals.begin(), vals.end(), rep.q.begin());
            rec.reps.push_back(rep);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what(), line);
    } catch (const InvalidInput& e) {
        throw ParseError(e.what(), line);
    }
    check_record(rec, line);
    return rec;
}

}  // namespace

CatalogRecord make_record(const CanonicalClass& c) {
    CatalogRecord rec;
    rec.canon = c;
    const TopInvariants inv = invariants(c.canon);
    rec.p1 = inv.p1;
    rec.s = inv.s;
    rec.p2 = inv.p2;
    rec.reps = representatives(c);
    rec.curvature = best_curvature(c);
    rec.new_example = positive_entries(c.canon) == 3;
    return rec;
}

std::vector<CatalogRecord> enumerate_classes(std::int64_t p1_max, unsigned threads) {
    if (p1_max < 3) throw InvalidInput("p1_max must be at least 3");
    const std::int64_t sos_max = 2 * p1_max;
    const std::int64_t r1_max = floor_odd_sqrt(sos_max - 5);

    std::vector<std::int64_t> leading;
    for (std::int64_t r1 = 1; r1 <= r1_max; r1 += 2) leading.push_back(r1);

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(leading.size(), 1));

    std::vector<std::vector<CatalogRecord>> parts(leading.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < leading.size(); i = next.fetch_add(1)) {
            scan_partition(leading[i], sos_max, parts[i]);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<CatalogRecord> records;
    for (auto& part : parts) {
        records.insert(records.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
    }
    std::sort(records.begin(), records.end(),
              [](const CatalogRecord& a, const CatalogRecord& b) { return key_of(a) < key_of(b); });
    return records;
}

CensusSummary summarize_counts(const std::vector<CatalogRecord>& records) {
    CensusSummary s;
    s.total = records.size();
    for (const auto& r : records) {
        if (r.new_example) ++s.new_qp;
        ++s.by_class[r.curvature];
    }
    return s;
}

CollisionKey collision_key_from_string(std::string_view s) {
    if (s == "p1") return CollisionKey::P1;
    if (s == "p1s") return CollisionKey::P1S;
    if (s == "p1sp2") return CollisionKey::P1SP2;
    throw InvalidInput("unknown collision key '" + std::string(s) + "'");
}

std::vector<std::vector<CatalogRecord>> find_collisions(
    const std::vector<CatalogRecord>& records, CollisionKey key) {
    using GroupKey = std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>;
    std::map<GroupKey, std::vector<CatalogRecord>> groups;
    for (const auto& r : records) {
        GroupKey k{r.p1, 0, 0, 0};
        if (key != CollisionKey::P1) std::get<1>(k) = r.s;
        if (key == CollisionKey::P1SP2) {
            const std::int64_t other = r.s == 0 ? 0 : (r.s - r.p2) % r.s;
            std::get<2>(k) = std::min(r.p2, other);
            std::get<3>(k) = std::max(r.p2, other);
        }
        groups[k].push_back(r);
    }
    std::vector<std::vector<CatalogRecord>> out;
    for (auto& [k, members] : groups) {
        if (members.size() >= 2) out.push_back(std::move(members));
    }
    return out;
}

void export_records(const std::vector<CatalogRecord>& records, CatalogFormat format,
                    std::ostream& out) {
    if (format == CatalogFormat::CSV) {
        out << "canon;p1;s;p2;curvature;new_example;reps\n";
        for (const auto& r : records) {
            out << canon_field(r.canon.canon) << ';' << r.p1 << ';' << r.s << ';' << r.p2 << ';'
                << to_code(r.curvature) << ';' << (r.new_example ? "true" : "false") << ';'
                << reps_field(r.reps) << '\n';
        }
        return;
    }
    for (const auto& r : records) {
        nlohmann::ordered_json j;
        j["canon"] = r.canon.canon.r;
        j["p1"] = r.p1;
        j["s"] = r.s;
        j["p2"] = r.p2;
        j["curvature"] = to_code(r.curvature);
        j["new_example"] = r.new_example;
        auto reps = nlohmann::ordered_json::array();
        for (const auto& rep : r.reps) reps.push_back(rep.q);
        j["reps"] = std::move(reps);
        out << j.dump() << '\n';
    }
}

void export_records(const std::vector<CatalogRecord>& records, CatalogFormat format,
                    const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot open '" + path + "' for writing");
    export_records(records, format, out);
}

std::vector<CatalogRecord> load_records(std::istream& in) {
    std::vector<CatalogRecord> records;
    std::string line;
    std::size_t line_no = 0;
    bool csv = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line_no == 1 && line.rfind("canon;", 0) == 0) {
            csv = true;
            continue;
        }
        records.push_back(csv ? record_from_csv(line, line_no)
                              : record_from_json(line, line_no));
    }
    return records;
}

std::vector<CatalogRecord> load_records(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    return load_records(in);
}

}  // namespace bazaikin
