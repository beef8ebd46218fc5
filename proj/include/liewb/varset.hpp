#ifndef LIEWB_VARSET_HPP
#define LIEWB_VARSET_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace liewb {

// Ordered set of variable names. Names flagged as parameters admit negative
// (Laurent) exponents; all other variables are ordinary polynomial variables.
class VarSet {
  public:
    VarSet() = default;

    static VarSet make(std::vector<std::string> names,
                       std::vector<std::string> param_names = {});

    size_t size() const { return d_ ? d_->names.size() : 0; }
    const std::vector<std::string>& names() const;
    const std::string& name(size_t i) const { return names().at(i); }
    bool is_param(size_t i) const;
    bool has_params() const;
    std::optional<size_t> index_of(const std::string& name) const;

    bool operator==(const VarSet& other) const;
    bool operator!=(const VarSet& other) const { return !(*this == other); }

  private:
    struct Data {
        std::vector<std::string> names;
        std::vector<bool> param;
    };
    std::shared_ptr<const Data> d_;
};

} // namespace liewb

#endif
