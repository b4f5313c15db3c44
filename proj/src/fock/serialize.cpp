#include "fockforge/fock/serialize.hpp"

namespace fockforge::fock {

Json to_json(const FockVector& v, const exact::VarSpec& vars) {
    Json out = Json::array();
    for (const auto& [m, c] : v.terms()) {
        Json mono = Json::array();
        for (const auto& x : m) mono.push_back({x.n, x.gen});
        out.push_back({{"monomial", mono}, {"coeff", c.to_string(vars)}});
    }
    return out;
}

Json to_json(const BosonLattice& L) {
    Json gram = Json::array();
    for (std::size_t i = 0; i < L.rank(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < L.rank(); ++j) row.push_back(exact::rational_to_string(L.gram()(i, j)));
        gram.push_back(row);
    }
    return {{"rank", L.rank()}, {"gram", gram}, {"form", to_string(L.form())}, {"labels", L.labels()}};
}

Json to_json(const OperatorMatrix& op) {
    const auto& vars = *op.source()->params().vars;
    Json blocks = Json::object();
    for (const auto& [d, m] : op.blocks()) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Json row = Json::array();
            for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string(vars));
            rows.push_back(row);
        }
        blocks[std::to_string(d)] = rows;
    }
    return {{"shift", op.shift()}, {"blocks", blocks}};
}

}  // namespace fockforge::fock
