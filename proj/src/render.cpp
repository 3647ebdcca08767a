#include "schubert/render.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace schubert {

namespace {

const char* kPalette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
                          "#a65628", "#f781bf", "#66c2a5", "#999999"};
constexpr int kPaletteSize = 9;

std::string format_set(const std::vector<int>& xs) {
    std::string s = "{";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(xs[i]);
    }
    return s + "}";
}

std::string blocks_string(const LeviContext& levi) {
    std::string s;
    for (int k = 0; k < levi.block_count(); ++k) {
        int lo = levi.cuts[k] + 1, hi = levi.cuts[k + 1];
        s += '(';
        s += std::to_string(lo);
        if (hi != lo) {
            s += '-';
            s += std::to_string(hi);
        }
        s += ')';
    }
    return s;
}

std::string context_header(const LeviContext& levi) {
    const SchubertContext& ctx = levi.ctx;
    return "N=" + std::to_string(ctx.N) + " d=" + std::to_string(ctx.d) +
           " w=" + to_string(ctx.w) + "\nr_q=" + format_set(levi.r_q) +
           " blocks=" + blocks_string(levi) + "\n";
}

std::string shapes_string(const std::vector<SkewShape>& shapes) {
    std::string s;
    for (size_t k = 0; k < shapes.size(); ++k) {
        if (k) s += ' ';
        s += to_string(shapes[k]);
    }
    return s;
}

std::string heads_string(const std::vector<Word>& heads) {
    std::string s;
    for (const Word& h : heads) s += to_string(h);
    return s;
}

std::string constituents_string(const std::map<IrreducibleLabel, long long>& cs) {
    std::string s;
    for (const auto& [label, mult] : cs) {
        if (!s.empty()) s += "; ";
        s += std::to_string(mult) + "x" + to_string(label);
    }
    return s;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

// component color index per node, following the lexicographic order of the
// component maxima (which are exactly the heads)
std::map<Word, int> component_index(const LeviContext& levi) {
    std::map<Word, int> idx;
    int next = 0;
    for (const auto& [head, members] : hasse_partition(levi)) {
        for (const Word& m : members) idx[m] = next;
        ++next;
    }
    return idx;
}

}  // namespace

std::string to_string(const IrreducibleLabel& label) {
    std::string s = "(";
    for (size_t k = 0; k < label.parts.size(); ++k) {
        if (k) s += ',';
        s += format_partition(label.parts[k]);
    }
    return s + ")";
}

std::string render_heads_text(const LeviContext& levi) {
    auto parts = hasse_partition(levi);
    std::string s = context_header(levi);
    s += "heads: " + std::to_string(parts.size()) + "\n";
    for (const auto& [head, members] : parts) {
        std::vector<int> cls = class_of(levi, head);
        s += to_string(head) + "  class=" + to_string(cls) +
             "  component=" + std::to_string(members.size()) + "\n";
    }
    return s;
}

std::string render_heads_csv(const LeviContext& levi) {
    std::string s = "head,class,component_size\n";
    for (const auto& [head, members] : hasse_partition(levi))
        s += csv_quote(to_string(head)) + "," +
             csv_quote(to_string(class_of(levi, head))) + "," +
             std::to_string(members.size()) + "\n";
    return s;
}

std::string render_heads_json(const LeviContext& levi) {
    nlohmann::json j;
    j["N"] = levi.ctx.N;
    j["d"] = levi.ctx.d;
    j["w"] = levi.ctx.w;
    j["r_q"] = levi.r_q;
    j["heads"] = nlohmann::json::array();
    for (const auto& [head, members] : hasse_partition(levi)) {
        nlohmann::json je;
        je["head"] = head;
        je["class"] = class_of(levi, head);
        je["component"] = members;
        j["heads"].push_back(std::move(je));
    }
    return j.dump(2);
}

std::string render_heads_dot(const LeviContext& levi) {
    HasseDiagram diag = hasse_diagram(levi.ctx);
    std::map<Word, int> comp = component_index(levi);
    std::set<Word> head_set;
    for (const Word& h : heads(levi)) head_set.insert(h);
    std::set<int> rq(levi.r_q.begin(), levi.r_q.end());

    std::string s = "digraph heads {\n  rankdir=BT;\n  node [shape=box, style=filled];\n";
    for (const Word& node : diag.nodes) {
        s += "  \"" + to_string(node) + "\" [fillcolor=\"" +
             kPalette[comp.at(node) % kPaletteSize] + "\"";
        if (head_set.count(node)) s += ", penwidth=3";
        s += "];\n";
    }
    for (const HasseEdge& e : diag.edges) {
        s += "  \"" + to_string(e.lower) + "\" -> \"" + to_string(e.upper) +
             "\" [label=\"" + std::to_string(e.label) + "\"";
        if (!rq.count(e.label)) s += ", style=dashed";
        s += "];\n";
    }
    return s + "}\n";
}

std::string render_hasse_text(const SchubertContext& ctx) {
    HasseDiagram diag = hasse_diagram(ctx);
    std::string s = "N=" + std::to_string(ctx.N) + " d=" + std::to_string(ctx.d) +
                    " w=" + to_string(ctx.w) + "\n";
    s += "nodes: " + std::to_string(diag.nodes.size()) + "\n";
    s += "edges: " + std::to_string(diag.edges.size()) + "\n";
    for (const HasseEdge& e : diag.edges)
        s += to_string(e.lower) + " -> " + to_string(e.upper) + " [" +
             std::to_string(e.label) + "]\n";
    return s;
}

std::string render_hasse_csv(const SchubertContext& ctx) {
    std::string s = "lower,upper,label\n";
    for (const HasseEdge& e : hasse_diagram(ctx).edges)
        s += csv_quote(to_string(e.lower)) + "," + csv_quote(to_string(e.upper)) +
             "," + std::to_string(e.label) + "\n";
    return s;
}

std::string render_hasse_dot(const SchubertContext& ctx) {
    HasseDiagram diag = hasse_diagram(ctx);
    std::string s = "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
    for (const Word& node : diag.nodes) s += "  \"" + to_string(node) + "\";\n";
    for (const HasseEdge& e : diag.edges)
        s += "  \"" + to_string(e.lower) + "\" -> \"" + to_string(e.upper) +
             "\" [label=\"" + std::to_string(e.label) + "\"];\n";
    return s + "}\n";
}

std::string render_report_text(const DecompositionReport& rep) {
    LeviContext levi(SchubertContext(rep.N, rep.d, rep.w), rep.r_q);
    std::string s = context_header(levi);
    s += "degree=" + std::to_string(rep.degree) +
         " entries=" + std::to_string(rep.entries.size()) + "\n";
    for (const ReportEntry& e : rep.entries) {
        s += "heads " + heads_string(e.heads) + " | shapes " +
             shapes_string(e.shapes) + " | dim " + e.tensor_dim.str() + "\n";
        for (const auto& [label, mult] : e.constituents)
            s += "  " + std::to_string(mult) + " x " + to_string(label) + "\n";
    }
    return s + "total_dim=" + rep.total_dim.str() + "\n";
}

std::string render_report_csv(const DecompositionReport& rep) {
    std::string s = "heads,shapes,tensor_dim,constituents\n";
    for (const ReportEntry& e : rep.entries)
        s += csv_quote(heads_string(e.heads)) + "," +
             csv_quote(shapes_string(e.shapes)) + "," + e.tensor_dim.str() + "," +
             csv_quote(constituents_string(e.constituents)) + "\n";
    return s;
}

namespace {

std::string smooth_string(const std::optional<SmoothForm>& f) {
    if (!f) return "";
    return "(" + std::to_string(f->p) + "," + std::to_string(f->m) + "," +
           std::to_string(f->i) + ")";
}

std::string verdict_string(Verdict v) {
    return v == Verdict::multiplicity_free_certified ? "certified" : "not_covered";
}

}  // namespace

std::string render_verdicts_text(const std::vector<SphericityVerdict>& table) {
    std::string s;
    for (const SphericityVerdict& v : table) {
        s += "w=" + to_string(v.w) + " dprl=" + std::to_string(v.block_count);
        s += " smooth=" + (v.smooth_form ? smooth_string(v.smooth_form) : "-");
        s += " det=" +
             (v.determinantal_form ? std::to_string(*v.determinantal_form) : "-");
        s += " verdict=" + verdict_string(v.theorem_verdict);
        if (v.empirical) {
            if (v.empirical->multiplicity_free)
                s += " empirical=ok(degree<=" +
                     std::to_string(v.empirical->max_degree_checked) + ")";
            else
                s += " empirical=violation(degree=" +
                     std::to_string(v.empirical->first_violation->first) +
                     ",label=" + to_string(v.empirical->first_violation->second) + ")";
        }
        s += "\n";
    }
    return s;
}

std::string render_verdicts_csv(const std::vector<SphericityVerdict>& table) {
    std::string s = "w,dprl,smooth,determinantal,theorem_verdict,empirical_bound,empirical_ok\n";
    for (const SphericityVerdict& v : table) {
        s += csv_quote(to_string(v.w)) + "," + std::to_string(v.block_count) + ",";
        if (v.smooth_form) s += csv_quote(smooth_string(v.smooth_form));
        s += ",";
        if (v.determinantal_form) s += std::to_string(*v.determinantal_form);
        s += "," + verdict_string(v.theorem_verdict) + ",";
        if (v.empirical) s += std::to_string(v.empirical->max_degree_checked);
        s += ",";
        if (v.empirical)
            s += v.empirical->multiplicity_free ? "true" : "false";
        s += "\n";
    }
    return s;
}

std::string render_verdicts_json(const std::vector<SphericityVerdict>& table) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SphericityVerdict& v : table) {
        nlohmann::json j;
        j["w"] = v.w;
        j["dprl"] = v.block_count;
        if (v.smooth_form)
            j["smooth"] = {{"p", v.smooth_form->p},
                           {"m", v.smooth_form->m},
                           {"i", v.smooth_form->i}};
        else
            j["smooth"] = nullptr;
        j["determinantal"] =
            v.determinantal_form ? nlohmann::json(*v.determinantal_form)
                                 : nlohmann::json(nullptr);
        j["theorem_verdict"] = verdict_string(v.theorem_verdict);
        if (v.empirical) {
            nlohmann::json je;
            je["bound"] = v.empirical->max_degree_checked;
            je["ok"] = v.empirical->multiplicity_free;
            if (v.empirical->first_violation) {
                je["violation"] = {
                    {"degree", v.empirical->first_violation->first},
                    {"parts", v.empirical->first_violation->second.parts}};
            } else {
                je["violation"] = nullptr;
            }
            j["empirical"] = std::move(je);
        } else {
            j["empirical"] = nullptr;
        }
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

}  // namespace schubert
