#ifndef CAUSALID_VARSET_HPP
#define CAUSALID_VARSET_HPP

#include <initializer_list>
#include <set>
#include <string>
#include <vector>

namespace causalid {

/// An ordered set of variable names. Iteration order is lexicographic,
/// which keeps every derived artifact (estimands, partitions, renders)
/// deterministic.
class VarSet {
public:
    using const_iterator = std::set<std::string>::const_iterator;

    VarSet() = default;
    VarSet(std::initializer_list<std::string> names) : names_(names) {}
    explicit VarSet(std::set<std::string> names) : names_(std::move(names)) {}

    template <typename Iter>
    VarSet(Iter first, Iter last) : names_(first, last) {}

    bool contains(const std::string& name) const { return names_.count(name) > 0; }
    bool empty() const { return names_.empty(); }
    std::size_t size() const { return names_.size(); }

    void insert(const std::string& name) { names_.insert(name); }
    void erase(const std::string& name) { names_.erase(name); }

    const_iterator begin() const { return names_.begin(); }
    const_iterator end() const { return names_.end(); }

    const std::set<std::string>& names() const { return names_; }
    std::vector<std::string> to_vector() const { return {names_.begin(), names_.end()}; }

    bool subset_of(const VarSet& other) const;
    bool intersects(const VarSet& other) const;

    friend VarSet operator|(const VarSet& a, const VarSet& b);
    friend VarSet operator&(const VarSet& a, const VarSet& b);
    friend VarSet operator-(const VarSet& a, const VarSet& b);

    VarSet& operator|=(const VarSet& other);
    VarSet& operator-=(const VarSet& other);

    bool operator==(const VarSet& other) const { return names_ == other.names_; }
    bool operator!=(const VarSet& other) const { return names_ != other.names_; }
    bool operator<(const VarSet& other) const { return names_ < other.names_; }

    /// Comma-separated rendering, e.g. "X,Y,Z".
    std::string str() const;

private:
    std::set<std::string> names_;
};

}  // namespace causalid

#endif
