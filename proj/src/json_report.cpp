#include "cisgraph/json_report.hpp"

#include "cisgraph/graph_io.hpp"

namespace cisgraph {

using nlohmann::json;

void to_json(json& j, const Graph& g) {
    j = json{{"order", g.order()}, {"edges", g.edge_count()}, {"graph6", to_graph6(g)}};
}

void to_json(json& j, const VertexSet& s) { j = s.to_vector(); }

void to_json(json& j, const Matching& m) { j = m.edges; }

void to_json(json& j, const CombWitness& w) {
    j = json{{"kind", w.kind == CombKind::comb ? "comb" : "anticomb"},
             {"k", w.clique.size()},
             {"clique", w.clique},
             {"stem", w.stem},
             {"settler", w.settler ? json(*w.settler) : json(nullptr)}};
}

void to_json(json& j, const RootCertificate& c) {
    j = json{{"root", c.root}, {"edge_to_vertex", c.edge_of_vertex}};
}

const char* to_string(RimVerdict v) {
    switch (v) {
    case RimVerdict::K2n: return "K2n";
    case RimVerdict::Knn: return "Knn";
    case RimVerdict::leaf_extension: return "leaf_extension";
    case RimVerdict::not_rim: return "not_rim";
    }
    return "?";
}

void to_json(json& j, const RimForm& f) {
    j = json{{"verdict", to_string(f.verdict)}};
    switch (f.verdict) {
    case RimVerdict::K2n:
        j["n"] = f.n;
        break;
    case RimVerdict::Knn:
        j["n"] = f.n;
        j["sides"] = json::array({f.side_a, f.side_b});
        break;
    case RimVerdict::leaf_extension:
        j["core"] = f.core;
        j["leaves"] = f.leaves;
        break;
    case RimVerdict::not_rim:
        break;
    }
}

void to_json(json& j, const CisResult& r) {
    j = json{{"cis", r.cis}};
    if (r.witness)
        j["witness"] = json{{"clique", r.witness->first}, {"stable_set", r.witness->second}};
}

const char* to_string(RecognitionVerdict v) {
    switch (v) {
    case RecognitionVerdict::cis: return "cis";
    case RecognitionVerdict::not_cis: return "not_cis";
    case RecognitionVerdict::not_claw_free: return "not_claw_free";
    }
    return "?";
}

const char* to_string(ComponentForm f) {
    switch (f) {
    case ComponentForm::complement_pk2_qk1: return "complement_pk2_qk1";
    case ComponentForm::line_of_knn: return "line_of_knn";
    case ComponentForm::line_of_corona: return "line_of_corona";
    case ComponentForm::none: return "none";
    }
    return "?";
}

void to_json(json& j, const ComponentReport& c) {
    j = json{{"vertices", c.vertices},
             {"reduced", c.reduced ? json(*c.reduced) : json(nullptr)},
             {"twin_class_of", c.twin_class_of},
             {"form", c.form == ComponentForm::none ? json(nullptr) : json(to_string(c.form))}};
    json params = json::object();
    json witness = json::object();
    switch (c.form) {
    case ComponentForm::complement_pk2_qk1:
        params["p"] = c.p;
        params["q"] = c.q;
        break;
    case ComponentForm::line_of_knn:
        params["n"] = c.n;
        witness["root"] = *c.root;
        witness["sides"] = json::array({c.side_a, c.side_b});
        break;
    case ComponentForm::line_of_corona:
        params["core"] = *c.core;
        witness["root"] = *c.root;
        witness["host_leaf"] = c.host_leaf;
        break;
    case ComponentForm::none:
        break;
    }
    j["params"] = params;
    j["witness"] = witness;
}

void to_json(json& j, const Refutation& r) {
    switch (r.kind) {
    case Refutation::Kind::claw:
        j = json{{"type", "claw"}, {"vertices", r.claw}};
        break;
    case Refutation::Kind::unsettled_comb:
        j = json{{"type", "unsettled_comb"}, {"witness", *r.comb},
                 {"component", r.component_index}};
        break;
    case Refutation::Kind::component_without_form:
        j = json{{"type", "component_without_form"}, {"component", r.component_index}};
        break;
    }
}

void to_json(json& j, const RecognitionReport& r) {
    j = json{{"verdict", to_string(r.verdict)},
             {"components", r.components},
             {"refutation", r.refutation ? json(*r.refutation) : json(nullptr)}};
}

void to_json(json& j, const AlphaOmegaReport& r) {
    j = json{{"order", r.order},
             {"alpha", r.alpha},
             {"omega", r.omega},
             {"bound_holds", r.bound_holds}};
}

void to_json(json& j, const WeightedBoundReport& r) {
    j = json{{"total_weight", r.total_weight},
             {"max_weighted_degree", r.max_weighted_degree},
             {"matching_number", r.matching_number},
             {"holds", r.holds}};
}

void to_json(json& j, const ViolationRow& r) {
    j = json{{"p", r.p},
             {"vertices", r.vertices},
             {"alpha", r.alpha},
             {"omega", r.omega},
             {"violates", r.violates},
             {"ratio", r.ratio},
             {"cis_certification", r.certification == CisCertification::oracle_verified
                                       ? "oracle_verified"
                                       : "structural_only"}};
}

} // namespace cisgraph
