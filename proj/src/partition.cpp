#include "singraph/partition.hpp"

#include "singraph/rational.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sg {

auto SetPartition::from_labels(const std::vector<int>& labels) -> SetPartition {
    SetPartition p;
    p.label_.resize(labels.size());
    std::vector<int> remap;
    for (size_t i = 0; i < labels.size(); ++i) {
        int l = labels[i];
        if (l < 0) throw ValidationError("negative block label");
        if (static_cast<size_t>(l) >= remap.size()) remap.resize(static_cast<size_t>(l) + 1, -1);
        if (remap[static_cast<size_t>(l)] < 0) remap[static_cast<size_t>(l)] = p.blocks_++;
        p.label_[i] = remap[static_cast<size_t>(l)];
    }
    return p;
}

auto SetPartition::from_blocks(int size, const std::vector<std::vector<int>>& blocks) -> SetPartition {
    std::vector<int> labels(static_cast<size_t>(size), -1);
    int b = 0;
    for (const auto& block : blocks) {
        if (block.empty()) throw ValidationError("empty block");
        for (int x : block) {
            if (x < 0 || x >= size) throw ValidationError("block element out of range");
            if (labels[static_cast<size_t>(x)] >= 0) throw ValidationError("blocks overlap");
            labels[static_cast<size_t>(x)] = b;
        }
        ++b;
    }
    for (int l : labels)
        if (l < 0) throw ValidationError("blocks do not cover the ground set");
    return from_labels(labels);
}

auto SetPartition::singletons(int size) -> SetPartition {
    std::vector<int> labels(static_cast<size_t>(size));
    std::iota(labels.begin(), labels.end(), 0);
    return from_labels(labels);
}

auto SetPartition::one_block(int size) -> SetPartition {
    return from_labels(std::vector<int>(static_cast<size_t>(size), 0));
}

auto SetPartition::blocks() const -> std::vector<std::vector<int>> {
    std::vector<std::vector<int>> out(static_cast<size_t>(blocks_));
    for (int i = 0; i < size(); ++i) out[static_cast<size_t>(label_[static_cast<size_t>(i)])].push_back(i);
    return out;
}

auto SetPartition::block_sizes() const -> std::vector<int> {
    std::vector<int> sz(static_cast<size_t>(blocks_), 0);
    for (int l : label_) ++sz[static_cast<size_t>(l)];
    return sz;
}

auto SetPartition::type() const -> std::vector<int> {
    auto sz = block_sizes();
    std::sort(sz.rbegin(), sz.rend());
    return sz;
}

auto SetPartition::restrict_to(const std::vector<int>& subset) const -> SetPartition {
    std::vector<int> labels;
    labels.reserve(subset.size());
    for (int x : subset) labels.push_back(label_.at(static_cast<size_t>(x)));
    return from_labels(labels);
}

auto SetPartition::meet(const SetPartition& other) const -> SetPartition {
    if (other.size() != size()) throw ValidationError("meet of partitions of different sets");
    std::vector<int> labels(label_.size());
    for (size_t i = 0; i < labels.size(); ++i) labels[i] = label_[i] * other.blocks_ + other.label_[i];
    return from_labels(labels);
}

auto SetPartition::to_string() const -> std::string {
    std::ostringstream out;
    for (const auto& b : blocks()) {
        out << '{';
        for (size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b[i];
        out << '}';
    }
    return out.str();
}

auto mobius_for_blocks(int blocks) -> long long {
    long long f = 1;
    for (int i = 2; i < blocks; ++i) f *= i;
    return (blocks % 2 == 1) ? f : -f;
}

auto mobius(const SetPartition& pi) -> long long { return mobius_for_blocks(pi.block_count()); }

auto bell_number(int n) -> unsigned long long {
    // Bell triangle.
    std::vector<unsigned long long> row{1};
    for (int i = 0; i < n; ++i) {
        std::vector<unsigned long long> next{row.back()};
        for (unsigned long long x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

SetPartitionStream::SetPartitionStream(int n) : n_(n) {
    if (n < 0 || n > kMaxGround)
        throw ValidationError("ground set size " + std::to_string(n) + " outside 0.." + std::to_string(kMaxGround));
    label_.assign(static_cast<size_t>(n), 0);
    prefix_max_.assign(static_cast<size_t>(n), 0);
}

auto SetPartitionStream::next() -> bool {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        return true;
    }
    for (int i = n_ - 1; i >= 1; --i) {
        auto ui = static_cast<size_t>(i);
        if (label_[ui] <= prefix_max_[ui - 1]) {
            ++label_[ui];
            prefix_max_[ui] = std::max(prefix_max_[ui - 1], label_[ui]);
            for (size_t j = ui + 1; j < label_.size(); ++j) {
                label_[j] = 0;
                prefix_max_[j] = prefix_max_[ui];
            }
            max_ = prefix_max_.back();
            return true;
        }
    }
    done_ = true;
    return false;
}

set_partitions::set_partitions(int n) : n_(n) {
    if (n < 0 || n > kMaxGround)
        throw ValidationError("ground set size " + std::to_string(n) + " outside 0.." + std::to_string(kMaxGround));
}

auto set_partitions::iterator::operator++() -> iterator& {
    if (stream_->next()) current_ = SetPartition::from_labels(stream_->labels());
    else stream_.reset();
    return *this;
}

Hypergraph::Hypergraph(int vertices, std::vector<std::vector<int>> edges) : s_(vertices), edges_(std::move(edges)) {
    for (auto& e : edges_) {
        if (e.size() < 2) throw ValidationError("hyperedge of size < 2");
        for (int v : e)
            if (v < 0 || v >= s_) throw ValidationError("hyperedge vertex out of range");
        std::sort(e.begin(), e.end());
    }
    std::sort(edges_.begin(), edges_.end());
}

auto Hypergraph::degree_sum() const -> int {
    int d = 0;
    for (const auto& e : edges_) d += static_cast<int>(e.size()) - 1;
    return d;
}

auto Hypergraph::to_string() const -> std::string {
    std::ostringstream out;
    for (const auto& e : edges_) {
        out << '{';
        for (size_t i = 0; i < e.size(); ++i) out << (i ? "," : "") << e[i] + 1;
        out << '}';
    }
    if (edges_.empty()) out << "{}";
    return out.str();
}

auto induced_hypergraph(const SetPartition& pi, const std::vector<int>& graph_of, int s) -> Hypergraph {
    if (static_cast<int>(graph_of.size()) != pi.size()) throw ValidationError("ground labelling size mismatch");
    std::vector<std::vector<int>> edges;
    for (const auto& b : pi.blocks()) {
        if (b.size() < 2) continue;
        std::vector<int> e;
        for (int x : b) e.push_back(graph_of[static_cast<size_t>(x)]);
        edges.push_back(std::move(e));
    }
    return Hypergraph(s, std::move(edges));
}

namespace {

auto find(std::vector<int>& parent, int x) -> int {
    while (parent[static_cast<size_t>(x)] != x) {
        parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        x = parent[static_cast<size_t>(x)];
    }
    return x;
}

}  // namespace

auto is_connected(const Hypergraph& h) -> bool {
    int s = h.vertex_count();
    if (s <= 1) return true;
    std::vector<int> parent(static_cast<size_t>(s));
    std::iota(parent.begin(), parent.end(), 0);
    int comps = s;
    for (const auto& e : h.edges()) {
        for (size_t i = 1; i < e.size(); ++i) {
            int a = find(parent, e[0]), b = find(parent, e[i]);
            if (a != b) {
                parent[static_cast<size_t>(a)] = b;
                --comps;
            }
        }
    }
    return comps == 1;
}

auto is_hypertree(const Hypergraph& h) -> bool {
    return is_connected(h) && h.degree_sum() == h.vertex_count() - 1;
}

namespace {

void multisets(int s, int size, int from, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == size) {
        out.push_back(cur);
        return;
    }
    for (int v = from; v < s; ++v) {
        cur.push_back(v);
        multisets(s, size, v, cur, out);
        cur.pop_back();
    }
}

void choose_edges(int s, const std::vector<std::vector<int>>& cand, size_t from, int budget,
                  std::vector<std::vector<int>>& cur, std::vector<Hypergraph>& out) {
    if (budget == 0) {
        Hypergraph h(s, cur);
        if (is_connected(h)) out.push_back(std::move(h));
        return;
    }
    for (size_t i = from; i < cand.size(); ++i) {
        int d = static_cast<int>(cand[i].size()) - 1;
        if (d > budget) continue;
        cur.push_back(cand[i]);
        choose_edges(s, cand, i, budget - d, cur, out);
        cur.pop_back();
    }
}

}  // namespace

auto enumerate_hypertrees(int s) -> std::vector<Hypergraph> {
    if (s < 1 || s > 6) throw ValidationError("enumerate_hypertrees supports 1 <= s <= 6");
    std::vector<std::vector<int>> cand;
    for (int size = 2; size <= s; ++size) {
        std::vector<int> cur;
        multisets(s, size, 0, cur, cand);
    }
    std::vector<Hypergraph> out;
    std::vector<std::vector<int>> cur;
    choose_edges(s, cand, 0, s - 1, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

JointGround::JointGround(const std::vector<int>& sizes_) : sizes(sizes_) {
    int off = 0;
    for (size_t r = 0; r < sizes.size(); ++r) {
        offset.push_back(off);
        for (int a = 0; a < sizes[r]; ++a) graph_of.push_back(static_cast<int>(r));
        off += sizes[r];
    }
}

HypertreePartitionStream::HypertreePartitionStream(const Hypergraph& h, const std::vector<int>& sizes)
    : h_(h), ground_(sizes) {
    if (static_cast<int>(sizes.size()) != h.vertex_count())
        throw ValidationError("one size per hypergraph vertex required");
    if (!is_hypertree(h)) throw ValidationError("hypertree_partitions requires a hypertree");
    if (ground_.total() > kMaxGround) throw ValidationError("joint ground set exceeds " + std::to_string(kMaxGround));
    incident_.resize(sizes.size());
    for (size_t q = 0; q < h_.edges().size(); ++q)
        for (int r : h_.edges()[q]) incident_[static_cast<size_t>(r)].push_back(static_cast<int>(q));
}

auto HypertreePartitionStream::advance(size_t r) -> bool {
    // Next injective tuple for vertex r in lexicographic order.
    auto& c = choice_[r];
    int k = ground_.sizes[r];
    while (true) {
        int pos = static_cast<int>(c.size()) - 1;
        while (pos >= 0) {
            auto up = static_cast<size_t>(pos);
            if (c[up] + 1 < k) {
                ++c[up];
                for (size_t j = up + 1; j < c.size(); ++j) c[j] = 0;
                break;
            }
            --pos;
        }
        if (pos < 0) return false;
        std::vector<int> sorted = c;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) return true;
    }
}

void HypertreePartitionStream::build() {
    std::vector<int> labels(static_cast<size_t>(ground_.total()), -1);
    int next = 0;
    std::vector<size_t> cursor(incident_.size(), 0);
    for (size_t q = 0; q < h_.edges().size(); ++q) {
        for (int r : h_.edges()[q]) {
            auto ur = static_cast<size_t>(r);
            size_t pos = std::find(incident_[ur].begin(), incident_[ur].end(), static_cast<int>(q)) - incident_[ur].begin();
            labels[static_cast<size_t>(ground_.index(r, choice_[ur][pos]))] = next;
        }
        ++next;
    }
    for (int& l : labels)
        if (l < 0) l = next++;
    current_ = SetPartition::from_labels(labels);
}

auto HypertreePartitionStream::next() -> bool {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        choice_.resize(incident_.size());
        for (size_t r = 0; r < incident_.size(); ++r) {
            int c = static_cast<int>(incident_[r].size());
            if (c > ground_.sizes[r]) {
                done_ = true;
                return false;
            }
            choice_[r].resize(static_cast<size_t>(c));
            std::iota(choice_[r].begin(), choice_[r].end(), 0);
        }
        build();
        return true;
    }
    for (size_t r = incident_.size(); r-- > 0;) {
        if (advance(r)) {
            build();
            return true;
        }
        std::iota(choice_[r].begin(), choice_[r].end(), 0);
    }
    done_ = true;
    return false;
}

auto hypertree_partitions(const Hypergraph& h, const std::vector<int>& sizes) -> std::vector<SetPartition> {
    std::vector<SetPartition> out;
    HypertreePartitionStream st(h, sizes);
    while (st.next()) out.push_back(st.current());
    return out;
}

}  // namespace sg
