#include "qperm/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "json.hpp"
#include "qperm/errors.hpp"

namespace qperm {

namespace {

int checked_block_count(const std::vector<int>& growth) {
    if (growth.empty()) throw InvalidArgumentError("partition ground set must be nonempty");
    int max_label = -1;
    for (int label : growth) {
        if (label < 0 || label > max_label + 1) {
            throw InvalidArgumentError("labels are not a restricted-growth string");
        }
        max_label = std::max(max_label, label);
    }
    return max_label + 1;
}

}  // namespace

Partition::Partition(std::vector<int> growth)
    : growth_(std::move(growth)), block_count_(checked_block_count(growth_)) {}

Partition Partition::from_labels(const std::vector<int>& labels) {
    if (labels.empty()) throw InvalidArgumentError("partition ground set must be nonempty");
    std::vector<int> canonical(labels.size());
    std::vector<std::pair<int, int>> seen;  // (original label, canonical label)
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto it = std::find_if(seen.begin(), seen.end(),
                               [&](const auto& e) { return e.first == labels[i]; });
        if (it == seen.end()) {
            seen.emplace_back(labels[i], static_cast<int>(seen.size()));
            canonical[i] = static_cast<int>(seen.size()) - 1;
        } else {
            canonical[i] = it->second;
        }
    }
    return Partition(std::move(canonical));
}

Partition Partition::from_blocks(const std::vector<std::vector<int>>& blocks) {
    std::size_t k = 0;
    for (const auto& b : blocks) k += b.size();
    if (k == 0) throw InvalidArgumentError("partition ground set must be nonempty");
    std::vector<int> labels(k, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw InvalidArgumentError("empty block");
        for (int element : blocks[b]) {
            if (element < 1 || static_cast<std::size_t>(element) > k || labels[element - 1] != -1) {
                throw InvalidArgumentError("blocks do not partition {1..k}");
            }
            labels[element - 1] = static_cast<int>(b);
        }
    }
    return from_labels(labels);
}

Partition Partition::from_block_string(const std::string& text) {
    std::vector<std::vector<int>> blocks;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != '{') throw InvalidArgumentError("malformed block string: \"" + text + "\"");
        ++pos;
        std::vector<int> block;
        while (true) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) throw InvalidArgumentError("malformed block string: \"" + text + "\"");
            block.push_back(std::stoi(text.substr(start, pos - start)));
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            break;
        }
        if (pos >= text.size() || text[pos] != '}') {
            throw InvalidArgumentError("malformed block string: \"" + text + "\"");
        }
        ++pos;
        blocks.push_back(std::move(block));
    }
    if (blocks.empty()) throw InvalidArgumentError("malformed block string: \"" + text + "\"");
    return from_blocks(blocks);
}

Partition Partition::single_block(int k) {
    if (k < 1) throw InvalidArgumentError("k must be positive");
    return Partition(std::vector<int>(k, 0));
}

Partition Partition::discrete(int k) {
    if (k < 1) throw InvalidArgumentError("k must be positive");
    std::vector<int> growth(k);
    std::iota(growth.begin(), growth.end(), 0);
    return Partition(std::move(growth));
}

std::vector<std::vector<int>> Partition::blocks() const {
    std::vector<std::vector<int>> result(block_count_);
    for (int pos = 0; pos < k(); ++pos) result[growth_[pos]].push_back(pos + 1);
    return result;
}

std::string Partition::to_block_string() const {
    std::string s;
    for (const auto& block : blocks()) {
        s += '{';
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(block[i]);
        }
        s += '}';
    }
    return s;
}

PartitionFamily::PartitionFamily(int k, PartitionKind kind, std::vector<Partition> members)
    : k_(k), kind_(kind), members_(std::move(members)) {}

PartitionFamily PartitionFamily::enumerate(int k, PartitionKind kind) {
    if (k < 1 || k > max_k) {
        throw InvalidArgumentError("enumeration requires 1 <= k <= " + std::to_string(max_k));
    }
    std::vector<Partition> members;
    std::vector<int> growth(k);
    std::vector<int> first_occ(k, -1);  // first position carrying each label
    std::vector<int> last_occ(k, -1);   // latest position carrying each label

    // Depth-first over positions with labels tried in increasing order, so
    // complete strings are emitted in lexicographic order. For the
    // non-crossing kind a position may reuse label l (whose block currently
    // ends at m = last_occ[l]) only when every block met strictly between m
    // and the position started after m; joining across such a block would
    // create an a<b<c<d pattern.
    std::function<void(int, int)> visit = [&](int pos, int used) {
        if (pos == k) {
            members.emplace_back(growth);
            return;
        }
        for (int label = 0; label <= used; ++label) {
            if (label < used && kind == PartitionKind::noncrossing) {
                int m = last_occ[label];
                bool ok = true;
                for (int b = m + 1; b < pos; ++b) {
                    if (first_occ[growth[b]] < m) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
            }
            growth[pos] = label;
            int saved_first = first_occ[label];
            int saved_last = last_occ[label];
            if (saved_first == -1) first_occ[label] = pos;
            last_occ[label] = pos;
            visit(pos + 1, label == used ? used + 1 : used);
            first_occ[label] = saved_first;
            last_occ[label] = saved_last;
        }
    };
    visit(0, 0);
    return PartitionFamily(k, kind, std::move(members));
}

std::optional<std::size_t> PartitionFamily::index_of(const Partition& p) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), p);
    if (it == members_.end() || !(*it == p)) return std::nullopt;
    return static_cast<std::size_t>(it - members_.begin());
}

bool is_noncrossing(const Partition& p) {
    const auto& g = p.growth();
    int k = p.k();
    std::vector<int> first(p.block_count(), -1), last(p.block_count(), -1);
    for (int pos = 0; pos < k; ++pos) {
        if (first[g[pos]] == -1) first[g[pos]] = pos;
        last[g[pos]] = pos;
    }
    // Between consecutive elements a < c of one block, every block met must
    // lie entirely inside (a, c).
    std::vector<int> prev(p.block_count(), -1);
    for (int c = 0; c < k; ++c) {
        int a = prev[g[c]];
        if (a >= 0) {
            for (int b = a + 1; b < c; ++b) {
                if (first[g[b]] < a || last[g[b]] > c) return false;
            }
        }
        prev[g[c]] = c;
    }
    return true;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

Partition join(const Partition& p, const Partition& q) {
    if (p.k() != q.k()) throw InvalidArgumentError("join requires equal ground sets");
    int k = p.k();
    std::vector<int> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    auto merge_by = [&](const std::vector<int>& growth) {
        std::vector<int> anchor(k, -1);  // first position of each label
        for (int pos = 0; pos < k; ++pos) {
            int label = growth[pos];
            if (anchor[label] == -1) {
                anchor[label] = pos;
            } else {
                int a = find_root(parent, anchor[label]);
                int b = find_root(parent, pos);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
    };
    merge_by(p.growth());
    merge_by(q.growth());
    std::vector<int> labels(k);
    for (int pos = 0; pos < k; ++pos) labels[pos] = find_root(parent, pos);
    return Partition::from_labels(labels);
}

int delta(const Partition& p, const std::vector<int>& multi_index) {
    if (static_cast<int>(multi_index.size()) != p.k()) {
        throw InvalidArgumentError("multi-index length must equal the partition's k");
    }
    std::vector<int> value(p.block_count(), -1);
    for (int pos = 0; pos < p.k(); ++pos) {
        int label = p.growth()[pos];
        if (value[label] == -1) {
            value[label] = multi_index[pos];
        } else if (value[label] != multi_index[pos]) {
            return 0;
        }
    }
    return 1;
}

BigRational join_exponent(const Partition& p, const Partition& q) {
    if (p.k() != q.k()) throw InvalidArgumentError("join_exponent requires equal ground sets");
    if (!is_noncrossing(p) || !is_noncrossing(q)) {
        throw InvalidArgumentError("join_exponent is defined on non-crossing partitions only");
    }
    int joined = join(p, q).block_count();
    return BigRational(2L * joined - p.block_count() - q.block_count(), 2L);
}

std::string growth_to_json(const Partition& p) {
    nlohmann::json j = p.growth();
    return j.dump();
}

Partition partition_from_growth_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array()) {
        throw InvalidArgumentError("malformed growth-string JSON");
    }
    std::vector<int> growth;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw InvalidArgumentError("malformed growth-string JSON");
        growth.push_back(e.get<int>());
    }
    return Partition(std::move(growth));
}

}  // namespace qperm
