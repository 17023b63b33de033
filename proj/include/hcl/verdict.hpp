#pragma once

#include "hcl/multiform.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hcl {

/// Outcome of an identity verification: every failed condition is listed.
struct Verdict
{
    bool ok = true;
    std::vector<std::string> reasons;
    std::optional<Mismatch> mismatch;  // first failing basis tuple, if any
    std::vector<std::string> notes;    // conventions used, informational only

    void fail(std::string reason)
    {
        ok = false;
        reasons.push_back(std::move(reason));
    }
    void require(bool cond, std::string const & what)
    {
        if (!cond)
            fail(what);
    }
    void merge(Verdict const & o)
    {
        if (!o.ok)
            ok = false;
        reasons.insert(reasons.end(), o.reasons.begin(), o.reasons.end());
        notes.insert(notes.end(), o.notes.begin(), o.notes.end());
        if (!mismatch && o.mismatch)
            mismatch = o.mismatch;
    }
    explicit operator bool() const { return ok; }
};

}  // namespace hcl
