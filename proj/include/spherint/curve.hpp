#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <utility>

#include "spherint/quat.hpp"

namespace spherint {

enum class Method { slerp, squad, sider2, sider3, sider4, seno2, seno3 };

const char* method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

/// Evaluable parametric map t -> sphere point over [t_start, t_end].
/// slerp_calls_per_eval records the number of SLERP invocations one
/// interior evaluation performs for the tagged method.
class CurveSegment {
public:
    using Eval = std::function<SpherePoint(double)>;

    CurveSegment(double t_start, double t_end, Method method, int slerp_calls_per_eval, Eval eval)
        : t_start_(t_start),
          t_end_(t_end),
          method_(method),
          slerp_calls_per_eval_(slerp_calls_per_eval),
          eval_(std::move(eval)) {}

    SpherePoint eval(double t) const { return eval_(t); }

    double t_start() const { return t_start_; }
    double t_end() const { return t_end_; }
    Method method() const { return method_; }
    int slerp_calls_per_eval() const { return slerp_calls_per_eval_; }

private:
    double t_start_;
    double t_end_;
    Method method_;
    int slerp_calls_per_eval_;
    Eval eval_;
};

} // namespace spherint
