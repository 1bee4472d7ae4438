#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "vnge/graph.hpp"

namespace vnge {

/// Graph plus the file-level node labels. Files carry arbitrary string
/// ids; internally they are interned to dense integers in first-appearance
/// order, and the mapping is kept so output uses the original labels.
struct LabeledGraph {
    Graph graph;
    std::vector<std::string> labels;                 // dense id -> label
    std::unordered_map<std::string, NodeId> ids;     // label -> dense id

    NodeId intern(const std::string& label);
    const std::string& label_of(NodeId id) const { return labels.at(id); }

    /// Label-keyed structural equality (node labels and weighted edges),
    /// independent of interning order.
    bool same_labeled_structure(const LabeledGraph& other) const;

    /// Wraps a bare graph with decimal labels (id "7" for node 7).
    static LabeledGraph from_graph(const Graph& g);
};

/// Edge-list text format: one "u v w" edge per line (weight optional,
/// default 1), single-token lines declare isolated nodes, '#' lines and
/// blank lines are skipped. Duplicate edges, self-loops, and nonpositive
/// weights are parse errors with a line number.
LabeledGraph parse_edge_list(std::istream& in);
LabeledGraph load_edge_list(const std::string& path);

/// Canonical serialization: edges sorted by their (min,max) label pair,
/// then isolated nodes, weights with 17 significant digits.
/// parse(serialize(g)) reproduces the labeled structure exactly, and the
/// canonical form is a fixed point of the round trip.
void serialize_edge_list(const LabeledGraph& g, std::ostream& out);
std::string serialize_edge_list(const LabeledGraph& g);

/// One parsed change-stream step: the step id from the file and the
/// aggregated delta of its lines.
struct StreamStep {
    std::size_t step_id = 0;
    DeltaGraph delta;
};

/// Change-stream text format: lines "step op u v [w]" with op A (add
/// weight w), D (delete the edge), or M (add the signed weight delta w).
/// Step ids must be non-decreasing; the lines of one step form one delta.
/// Parsing tracks the evolving graph so D knows the current weight and
/// structural violations (deleting an absent edge, driving a weight
/// negative) surface as parse errors with line numbers. New labels extend
/// the base graph's interning.
std::vector<StreamStep> parse_change_stream(LabeledGraph& base, std::istream& in);
std::vector<StreamStep> load_change_stream(LabeledGraph& base, const std::string& path);

/// CSV emitter with a fixed column order and 17-significant-digit floats;
/// identical inputs yield identical bytes.
class CsvWriter {
public:
    CsvWriter(std::ostream& out, std::vector<std::string> columns);

    class Row {
    public:
        Row& cell(const std::string& text);
        Row& cell(double value);
        Row& cell(std::int64_t value);
        Row& cell(std::uint64_t value);
        Row& cell(bool value) { return cell(std::string(value ? "true" : "false")); }
        ~Row();

        Row(const Row&) = delete;
        Row& operator=(const Row&) = delete;

    private:
        friend class CsvWriter;
        explicit Row(CsvWriter& writer) : writer_(writer) {}
        CsvWriter& writer_;
        std::size_t emitted_ = 0;
    };

    Row row() { return Row(*this); }

private:
    std::ostream& out_;
    std::size_t column_count_;
};

/// %.17g rendering used for every floating-point CSV cell.
std::string format_double(double value);

} // namespace vnge
