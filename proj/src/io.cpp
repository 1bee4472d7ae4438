#include "vnge/io.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace vnge {

NodeId LabeledGraph::intern(const std::string& label) {
    auto it = ids.find(label);
    if (it != ids.end())
        return it->second;
    const auto id = static_cast<NodeId>(labels.size());
    labels.push_back(label);
    ids.emplace(label, id);
    graph.add_node(id);
    return id;
}

bool LabeledGraph::same_labeled_structure(const LabeledGraph& other) const {
    if (graph.node_count() != other.graph.node_count() ||
        graph.edge_count() != other.graph.edge_count())
        return false;
    for (const auto& [label, id] : ids)
        if (!other.ids.contains(label))
            return false;
    for (const auto& [key, w] : graph.edges()) {
        auto [u, v] = edge_endpoints(key);
        auto iu = other.ids.find(labels[u]);
        auto iv = other.ids.find(labels[v]);
        if (iu == other.ids.end() || iv == other.ids.end())
            return false;
        if (other.graph.edge_weight(iu->second, iv->second) != w)
            return false;
    }
    return true;
}

LabeledGraph LabeledGraph::from_graph(const Graph& g) {
    LabeledGraph lg;
    lg.graph = g;
    const std::vector<NodeId> nodes = g.sorted_nodes();
    const NodeId max_id = nodes.empty() ? 0 : nodes.back();
    lg.labels.resize(static_cast<std::size_t>(max_id) + 1);
    for (NodeId v : nodes) {
        lg.labels[v] = std::to_string(v);
        lg.ids.emplace(lg.labels[v], v);
    }
    return lg;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok)
        tokens.push_back(tok);
    return tokens;
}

bool is_comment_or_blank(const std::string& line) {
    for (char ch : line) {
        if (ch == ' ' || ch == '\t' || ch == '\r')
            continue;
        return ch == '#';
    }
    return true;
}

double parse_weight(const std::string& tok, std::size_t line_no) {
    std::size_t pos = 0;
    double w = 0.0;
    try {
        w = std::stod(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError("invalid weight '" + tok + "'", line_no);
    }
    if (pos != tok.size() || !std::isfinite(w))
        throw ParseError("invalid weight '" + tok + "'", line_no);
    return w;
}

std::size_t parse_step_id(const std::string& tok, std::size_t line_no) {
    for (char ch : tok)
        if (ch < '0' || ch > '9')
            throw ParseError("invalid step id '" + tok + "'", line_no);
    try {
        return std::stoull(tok);
    } catch (const std::exception&) {
        throw ParseError("invalid step id '" + tok + "'", line_no);
    }
}

} // namespace

LabeledGraph parse_edge_list(std::istream& in) {
    LabeledGraph lg;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line))
            continue;
        const std::vector<std::string> tokens = tokenize(line);
        if (tokens.size() == 1) {
            lg.intern(tokens[0]);
            continue;
        }
        if (tokens.size() > 3)
            throw ParseError("expected 'u v [w]' or a single node id", line_no);
        const NodeId u = lg.intern(tokens[0]);
        const NodeId v = lg.intern(tokens[1]);
        const double w = tokens.size() == 3 ? parse_weight(tokens[2], line_no) : 1.0;
        if (u == v)
            throw ParseError("self-loop on '" + tokens[0] + "'", line_no);
        if (lg.graph.has_edge(u, v))
            throw ParseError("duplicate edge '" + tokens[0] + " " + tokens[1] + "'", line_no);
        if (!(w > 0.0))
            throw ParseError("edge weight must be positive, got '" + tokens[2] + "'", line_no);
        lg.graph.add_edge(u, v, w);
    }
    return lg;
}

LabeledGraph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    return parse_edge_list(in);
}

void serialize_edge_list(const LabeledGraph& lg, std::ostream& out) {
    // Canonical order is label-based, so the serialization is a fixed
    // point of parse/serialize regardless of interning order.
    struct Line {
        const std::string* a;
        const std::string* b;
        double w;
    };
    std::vector<Line> lines;
    lines.reserve(lg.graph.edge_count());
    std::vector<bool> touched(lg.labels.size(), false);
    for (const auto& [key, w] : lg.graph.edges()) {
        auto [u, v] = edge_endpoints(key);
        touched[u] = touched[v] = true;
        const std::string* la = &lg.label_of(u);
        const std::string* lb = &lg.label_of(v);
        if (*lb < *la)
            std::swap(la, lb);
        lines.push_back({la, lb, w});
    }
    std::sort(lines.begin(), lines.end(), [](const Line& x, const Line& y) {
        if (*x.a != *y.a)
            return *x.a < *y.a;
        return *x.b < *y.b;
    });
    for (const Line& line : lines)
        out << *line.a << ' ' << *line.b << ' ' << format_double(line.w) << '\n';

    std::vector<const std::string*> isolated;
    for (NodeId v : lg.graph.sorted_nodes())
        if (!touched[v])
            isolated.push_back(&lg.label_of(v));
    std::sort(isolated.begin(), isolated.end(),
              [](const std::string* a, const std::string* b) { return *a < *b; });
    for (const std::string* label : isolated)
        out << *label << '\n';
}

std::string serialize_edge_list(const LabeledGraph& lg) {
    std::ostringstream ss;
    serialize_edge_list(lg, ss);
    return ss.str();
}

std::vector<StreamStep> parse_change_stream(LabeledGraph& base, std::istream& in) {
    std::vector<StreamStep> steps;
    std::vector<DeltaGraph::EdgeDelta> pending;
    // Running weights of the step under construction (start-of-step weight
    // plus in-step deltas), so D can bring an edge down to zero even after
    // earlier lines of the same step touched it.
    std::unordered_map<EdgeKey, double> running;
    bool in_step = false;
    std::size_t current_step = 0;

    auto flush = [&]() {
        if (!in_step)
            return;
        StreamStep step;
        step.step_id = current_step;
        step.delta = DeltaGraph::from_edge_deltas(pending);
        base.graph = apply_delta(base.graph, step.delta);
        steps.push_back(std::move(step));
        pending.clear();
        running.clear();
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line))
            continue;
        const std::vector<std::string> tokens = tokenize(line);
        if (tokens.size() < 4)
            throw ParseError("expected 'step op u v [w]'", line_no);
        const std::size_t step_id = parse_step_id(tokens[0], line_no);
        const std::string& op = tokens[1];

        if (in_step && step_id < current_step)
            throw ParseError("step ids must be non-decreasing", line_no);
        if (!in_step || step_id != current_step) {
            flush();
            in_step = true;
            current_step = step_id;
        }

        const NodeId u = base.intern(tokens[2]);
        const NodeId v = base.intern(tokens[3]);
        if (u == v)
            throw ParseError("self-loop on '" + tokens[2] + "'", line_no);
        const EdgeKey key = edge_key(u, v);
        if (!running.contains(key))
            running[key] = base.graph.edge_weight(u, v);
        double& w_run = running[key];

        double dw = 0.0;
        if (op == "A") {
            if (tokens.size() != 5)
                throw ParseError("A line needs a weight", line_no);
            dw = parse_weight(tokens[4], line_no);
            if (!(dw > 0.0))
                throw ParseError("A weight must be positive", line_no);
        } else if (op == "D") {
            if (tokens.size() != 4)
                throw ParseError("D line takes no weight", line_no);
            if (w_run <= kWeightEpsilon)
                throw ParseError("cannot delete absent edge '" + tokens[2] + " " + tokens[3] + "'",
                                 line_no);
            dw = -w_run;
        } else if (op == "M") {
            if (tokens.size() != 5)
                throw ParseError("M line needs a signed weight delta", line_no);
            dw = parse_weight(tokens[4], line_no);
            if (w_run + dw < -kWeightEpsilon)
                throw ParseError("edge '" + tokens[2] + " " + tokens[3] +
                                     "' would get negative weight",
                                 line_no);
        } else {
            throw ParseError("unknown op '" + op + "' (expected A, D, or M)", line_no);
        }
        w_run += dw;
        pending.push_back({u, v, dw});
    }
    flush();
    return steps;
}

std::vector<StreamStep> load_change_stream(LabeledGraph& base, const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    return parse_change_stream(base, in);
}

CsvWriter::CsvWriter(std::ostream& out, std::vector<std::string> columns)
    : out_(out), column_count_(columns.size()) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i > 0)
            out_ << ',';
        out_ << columns[i];
    }
    out_ << '\n';
}

CsvWriter::Row& CsvWriter::Row::cell(const std::string& text) {
    if (emitted_ > 0)
        writer_.out_ << ',';
    writer_.out_ << text;
    ++emitted_;
    return *this;
}

CsvWriter::Row& CsvWriter::Row::cell(double value) { return cell(format_double(value)); }

CsvWriter::Row& CsvWriter::Row::cell(std::int64_t value) { return cell(std::to_string(value)); }

CsvWriter::Row& CsvWriter::Row::cell(std::uint64_t value) { return cell(std::to_string(value)); }

CsvWriter::Row::~Row() {
    assert(emitted_ == writer_.column_count_ && "row width must match the header");
    writer_.out_ << '\n';
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

} // namespace vnge
