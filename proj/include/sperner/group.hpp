#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sperner/coxeter.hpp"
#include "sperner/gmpn.hpp"

namespace sperner {

// The minimal index-based surface the order builders need from a group
// backend.  Both backends are immutable after construction and queries are
// pure, so sources can be shared freely.
class GroupSource {
public:
    virtual ~GroupSource() = default;

    virtual std::string name() const = 0;
    virtual int rank() const = 0;
    virtual long order() const = 0;
    virtual int identity_index() const = 0;
    virtual const std::vector<int>& reflections() const = 0;
    virtual int multiply(int u, int w) const = 0;
    virtual int inverse(int w) const = 0;
    virtual int reflection_length(int w) const = 0;
    virtual int codim(int w) const = 0;
    virtual std::string label(int w) const = 0;
    virtual std::vector<int> conjugacy_partition() const = 0;
};

class GmpnSource final : public GroupSource {
public:
    GmpnSource(int m, int p, int n, long element_budget = 10000000L)
        : g_(m, p, n, element_budget) {}

    const GmpnGroup& group() const { return g_; }

    std::string name() const override {
        return "g(" + std::to_string(g_.m()) + "," + std::to_string(g_.p()) + "," +
               std::to_string(g_.n()) + ")";
    }
    int rank() const override { return g_.n(); }
    long order() const override { return g_.order(); }
    int identity_index() const override { return g_.identity_index(); }
    const std::vector<int>& reflections() const override { return g_.reflections(); }
    int multiply(int u, int w) const override { return g_.multiply(u, w); }
    int inverse(int w) const override { return g_.inverse(w); }
    int reflection_length(int w) const override { return g_.reflection_length(w); }
    int codim(int w) const override { return g_.codim(w); }
    std::string label(int w) const override { return g_.label(w); }
    std::vector<int> conjugacy_partition() const override { return g_.conjugacy_partition(); }

private:
    GmpnGroup g_;
};

class CoxeterSource final : public GroupSource {
public:
    explicit CoxeterSource(CoxeterType t, double time_budget_seconds = 60.0)
        : g_(t, time_budget_seconds) {}

    const RootSystemGroup& group() const { return g_; }

    std::string name() const override { return g_.name(); }
    int rank() const override { return g_.rank(); }
    long order() const override { return g_.order(); }
    int identity_index() const override { return g_.identity_index(); }
    const std::vector<int>& reflections() const override { return g_.reflections(); }
    int multiply(int u, int w) const override { return g_.multiply(u, w); }
    int inverse(int w) const override { return g_.inverse(w); }
    int reflection_length(int w) const override { return g_.reflection_length(w); }
    int codim(int w) const override { return g_.codim(w); }
    std::string label(int w) const override { return g_.label(w); }
    std::vector<int> conjugacy_partition() const override { return g_.conjugacy_partition(); }

private:
    RootSystemGroup g_;
};

struct GroupBudgets {
    long elements = 10000000L;
    double seconds = 60.0;
};

// Grammar: `g(m,p,n)` (case-insensitive) or `h3|f4|h4|e6`.
std::unique_ptr<GroupSource> parse_group_spec(const std::string& spec,
                                              const GroupBudgets& budgets = {});

}  // namespace sperner
