#include "fockforge/exact/var_spec.hpp"

#include <algorithm>
#include <stdexcept>

namespace fockforge::exact {

namespace {

VarKind infer_kind(const std::string& name) {
    if (name.size() >= 2 && std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        if (name[0] == 'a') return VarKind::Cartan;
        if (name[0] == 'e') return VarKind::Epsilon;
    }
    return VarKind::Other;
}

}  // namespace

VarSpec::VarSpec(std::vector<std::string> names, std::vector<VarKind> kinds)
    : names_(std::move(names)), kinds_(std::move(kinds)) {
    if (names_.size() != kinds_.size()) throw std::invalid_argument("VarSpec: names/kinds length mismatch");
    if (names_.size() > max_vars) throw std::invalid_argument("VarSpec: at most 8 variables supported");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw std::invalid_argument("VarSpec: empty variable name");
        for (std::size_t j = 0; j < i; ++j) {
            if (names_[i] == names_[j]) throw std::invalid_argument("VarSpec: duplicate variable " + names_[i]);
        }
    }
}

std::shared_ptr<const VarSpec> VarSpec::equivariant(std::size_t n_cartan) {
    std::vector<std::string> names;
    std::vector<VarKind> kinds;
    for (std::size_t i = 1; i <= n_cartan; ++i) {
        names.push_back("a" + std::to_string(i));
        kinds.push_back(VarKind::Cartan);
    }
    names.emplace_back("e1");
    names.emplace_back("e2");
    kinds.push_back(VarKind::Epsilon);
    kinds.push_back(VarKind::Epsilon);
    return std::make_shared<const VarSpec>(std::move(names), std::move(kinds));
}

std::shared_ptr<const VarSpec> VarSpec::of(std::vector<std::string> names) {
    std::vector<VarKind> kinds;
    kinds.reserve(names.size());
    for (const auto& n : names) kinds.push_back(infer_kind(n));
    return std::make_shared<const VarSpec>(std::move(names), std::move(kinds));
}

std::optional<std::size_t> VarSpec::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::size_t VarSpec::require(const std::string& name) const {
    if (auto k = index_of(name)) return *k;
    throw std::invalid_argument("unknown variable '" + name + "'");
}

}  // namespace fockforge::exact
