#include "liewb/varset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace liewb {

VarSet VarSet::make(std::vector<std::string> names,
                    std::vector<std::string> param_names) {
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty())
            throw std::invalid_argument("empty variable name");
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate variable name: " + n);
    }
    auto data = std::make_shared<Data>();
    data->param.assign(names.size(), false);
    for (const auto& p : param_names) {
        auto it = std::find(names.begin(), names.end(), p);
        if (it == names.end())
            throw std::invalid_argument("parameter '" + p + "' not among variables");
        data->param[size_t(it - names.begin())] = true;
    }
    data->names = std::move(names);
    VarSet v;
    v.d_ = std::move(data);
    return v;
}

const std::vector<std::string>& VarSet::names() const {
    static const std::vector<std::string> empty;
    return d_ ? d_->names : empty;
}

bool VarSet::is_param(size_t i) const {
    return d_ && i < d_->param.size() && d_->param[i];
}

bool VarSet::has_params() const {
    if (!d_) return false;
    for (bool b : d_->param)
        if (b) return true;
    return false;
}

std::optional<size_t> VarSet::index_of(const std::string& name) const {
    if (!d_) return std::nullopt;
    for (size_t i = 0; i < d_->names.size(); ++i)
        if (d_->names[i] == name) return i;
    return std::nullopt;
}

bool VarSet::operator==(const VarSet& other) const {
    if (d_ == other.d_) return true;
    if (!d_ || !other.d_) return size() == other.size() && size() == 0;
    return d_->names == other.d_->names && d_->param == other.d_->param;
}

} // namespace liewb
