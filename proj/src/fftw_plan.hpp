#ifndef TFKERNEL_SRC_FFTW_PLAN_HPP
#define TFKERNEL_SRC_FFTW_PLAN_HPP

#include <complex>
#include <cstddef>
#include <mutex>
#include <span>

#include <fftw3.h>

namespace tfk::detail {

// Planner calls are not thread-safe in FFTW; execution is.
inline std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

/// In-place-free complex DFT of fixed geometry over an owned buffer pair.
class DftPlan {
public:
    /// dims are FFTW-ordered (last index fastest); sign is FFTW_FORWARD/BACKWARD.
    DftPlan(std::span<const int> dims, int sign) {
        total_ = 1;
        for (int d : dims) total_ *= static_cast<std::size_t>(d);
        in_ = fftw_alloc_complex(total_);
        out_ = fftw_alloc_complex(total_);
        std::lock_guard lock(fftw_planner_mutex());
        plan_ = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), in_, out_, sign, FFTW_ESTIMATE);
    }
    DftPlan(const DftPlan&) = delete;
    DftPlan& operator=(const DftPlan&) = delete;
    ~DftPlan() {
        {
            std::lock_guard lock(fftw_planner_mutex());
            fftw_destroy_plan(plan_);
        }
        fftw_free(in_);
        fftw_free(out_);
    }

    std::span<std::complex<double>> input() { return {reinterpret_cast<std::complex<double>*>(in_), total_}; }
    std::span<const std::complex<double>> output() const {
        return {reinterpret_cast<const std::complex<double>*>(out_), total_};
    }
    void execute() { fftw_execute(plan_); }

private:
    std::size_t total_ = 0;
    fftw_complex* in_ = nullptr;
    fftw_complex* out_ = nullptr;
    fftw_plan plan_ = nullptr;
};

} // namespace tfk::detail

#endif
