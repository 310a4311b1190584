#pragma once

#include <cstdint>
#include <iterator>
#include <memory>
#include <string>
#include <vector>

namespace sg {

inline constexpr int kMaxGround = 14;

// Partition of {0..size-1}, stored as a restricted growth string: label[0] = 0
// and label[i] <= 1 + max(label[0..i-1]). Blocks are therefore numbered by
// their minimum element, which fixes a canonical order.
class SetPartition {
public:
    SetPartition() = default;
    static auto from_labels(const std::vector<int>& labels) -> SetPartition;
    static auto from_blocks(int size, const std::vector<std::vector<int>>& blocks) -> SetPartition;
    static auto singletons(int size) -> SetPartition;
    static auto one_block(int size) -> SetPartition;

    auto size() const -> int { return static_cast<int>(label_.size()); }
    auto block_count() const -> int { return blocks_; }
    auto block_of(int i) const -> int { return label_[static_cast<size_t>(i)]; }
    auto labels() const -> const std::vector<int>& { return label_; }
    auto blocks() const -> std::vector<std::vector<int>>;
    auto block_sizes() const -> std::vector<int>;
    // Sizes sorted decreasingly, the integer partition t(pi).
    auto type() const -> std::vector<int>;

    // Restriction to a subset of points, relabelled 0..|subset|-1 in the order given.
    auto restrict_to(const std::vector<int>& subset) const -> SetPartition;
    auto meet(const SetPartition& other) const -> SetPartition;

    auto to_string() const -> std::string;
    friend auto operator==(const SetPartition&, const SetPartition&) -> bool = default;
    friend auto operator<(const SetPartition& a, const SetPartition& b) -> bool { return a.label_ < b.label_; }

private:
    std::vector<int> label_;
    int blocks_ = 0;
};

// (-1)^(l-1) (l-1)! for a partition with l blocks.
auto mobius(const SetPartition& pi) -> long long;
auto mobius_for_blocks(int blocks) -> long long;
auto bell_number(int n) -> unsigned long long;

// Streams all partitions of an n-set in restricted-growth-string order.
class SetPartitionStream {
public:
    explicit SetPartitionStream(int n);
    // Advances to the next partition; false once exhausted. The first call
    // yields the all-zero string (one block).
    auto next() -> bool;
    auto labels() const -> const std::vector<int>& { return label_; }
    auto block_count() const -> int { return max_ + 1; }
    auto current() const -> SetPartition { return SetPartition::from_labels(label_); }

private:
    int n_;
    std::vector<int> label_;
    std::vector<int> prefix_max_;
    int max_ = 0;
    bool started_ = false;
    bool done_ = false;
};

// Range adaptor so that `for (const SetPartition& p : set_partitions(n))` works.
class set_partitions {
public:
    explicit set_partitions(int n);

    class iterator {
    public:
        using value_type = SetPartition;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        explicit iterator(int n) : stream_(std::make_shared<SetPartitionStream>(n)) { ++*this; }
        auto operator*() const -> const SetPartition& { return current_; }
        auto operator++() -> iterator&;
        void operator++(int) { ++*this; }
        friend auto operator==(const iterator& a, std::default_sentinel_t) -> bool { return a.stream_ == nullptr; }

    private:
        std::shared_ptr<SetPartitionStream> stream_;
        SetPartition current_;
    };

    auto begin() const -> iterator { return iterator(n_); }
    auto end() const -> std::default_sentinel_t { return {}; }

private:
    int n_;
};

// Hypergraph on vertices 0..s-1; each hyperedge is a sorted multiset of size >= 2.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int vertices, std::vector<std::vector<int>> edges);

    auto vertex_count() const -> int { return s_; }
    auto edges() const -> const std::vector<std::vector<int>>& { return edges_; }
    auto degree_sum() const -> int;
    auto to_string() const -> std::string;  // 1-based, e.g. "{1,2,3}{3,4}"
    friend auto operator==(const Hypergraph&, const Hypergraph&) -> bool = default;
    friend auto operator<(const Hypergraph& a, const Hypergraph& b) -> bool { return a.edges_ < b.edges_; }

private:
    int s_ = 0;
    std::vector<std::vector<int>> edges_;  // sorted, so equality is multiset equality
};

// graph_of[i] is the graph index r of ground point i.
auto induced_hypergraph(const SetPartition& pi, const std::vector<int>& graph_of, int s) -> Hypergraph;
auto is_connected(const Hypergraph& h) -> bool;
auto is_hypertree(const Hypergraph& h) -> bool;
auto enumerate_hypertrees(int s) -> std::vector<Hypergraph>;

// Joint ground set of s graphs with sizes k_r: point (r, a) has flat index offset[r] + a.
struct JointGround {
    explicit JointGround(const std::vector<int>& sizes);
    std::vector<int> sizes;
    std::vector<int> offset;
    std::vector<int> graph_of;
    auto total() const -> int { return static_cast<int>(graph_of.size()); }
    auto index(int r, int a) const -> int { return offset[static_cast<size_t>(r)] + a; }
};

// Streams every partition pi of the joint ground set with H_pi == h, by choosing
// distinct vertices a_{r,e} in graph r for each hyperedge e containing r.
class HypertreePartitionStream {
public:
    HypertreePartitionStream(const Hypergraph& h, const std::vector<int>& sizes);
    auto next() -> bool;
    auto current() const -> const SetPartition& { return current_; }

private:
    auto advance(size_t r) -> bool;
    void build();

    Hypergraph h_;
    JointGround ground_;
    std::vector<std::vector<int>> incident_;  // per vertex r: hyperedge indices
    std::vector<std::vector<int>> choice_;    // per vertex r: chosen vertex per incident hyperedge
    SetPartition current_;
    bool started_ = false;
    bool done_ = false;
};

auto hypertree_partitions(const Hypergraph& h, const std::vector<int>& sizes) -> std::vector<SetPartition>;

}  // namespace sg
