#include "catode/suite.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "catode/identities.hpp"

namespace catode {

namespace {

long long as_param(unsigned long v) { return static_cast<long long>(v); }

Job single(IdentityId id, Mode mode, std::map<std::string, long long> params,
           std::function<VerificationReport()> fn)
{
    return Job{id, mode, std::move(params), [fn = std::move(fn)] { return std::vector<VerificationReport>{fn()}; }};
}

}  // namespace

void validate(const RunConfig& config)
{
    if (config.max_N < 1 || config.series_order < 1 || config.max_n < 1 || config.terms_eq59 < 1 ||
        config.terms_eq62 < 1 || config.max_conv_n < 1 || config.asymptotic_n < 1) {
        throw std::invalid_argument("all bounds must be at least 1");
    }
    if (config.series_order < config.max_N + 8) {
        throw std::invalid_argument("series order K must be at least max-N + 8");
    }
    if (config.terms_eq59 < 2) {
        throw std::invalid_argument("terms-eq59 must be at least 2");
    }
    if (config.max_conv_n < 2) {
        throw std::invalid_argument("max-conv-n must be at least 2");
    }
}

std::vector<IdentityId> all_identities()
{
    return {IdentityId::thm1, IdentityId::thm2, IdentityId::thm3, IdentityId::thm4, IdentityId::eq57, IdentityId::eq58,
            IdentityId::eq59, IdentityId::eq62, IdentityId::eq64, IdentityId::eq66, IdentityId::asymptotic};
}

std::vector<Job> plan_jobs(std::span<const IdentityId> ids, const RunConfig& config)
{
    validate(config);
    auto wanted = [&](IdentityId id) { return std::find(ids.begin(), ids.end(), id) != ids.end(); };
    const auto K = config.series_order;
    std::vector<Job> jobs;

    for (unsigned long N = 1; N <= config.max_N; ++N) {
        if (wanted(IdentityId::thm1)) {
            jobs.push_back(single(IdentityId::thm1, Mode::series, {{"N", as_param(N)}, {"K", as_param(K)}},
                                  [=] { return verify_thm1(N, Mode::series, K); }));
            jobs.push_back(single(IdentityId::thm1, Mode::symbolic, {{"N", as_param(N)}},
                                  [=] { return verify_thm1(N, Mode::symbolic, K); }));
        }
        if (wanted(IdentityId::thm3)) {
            jobs.push_back(single(IdentityId::thm3, Mode::series, {{"N", as_param(N)}, {"K", as_param(K)}},
                                  [=] { return verify_thm3(N, Mode::series, K); }));
            jobs.push_back(single(IdentityId::thm3, Mode::symbolic, {{"N", as_param(N)}},
                                  [=] { return verify_thm3(N, Mode::symbolic, K); }));
        }
        for (unsigned long n = 0; n <= config.max_n; ++n) {
            if (wanted(IdentityId::thm2)) {
                jobs.push_back(single(IdentityId::thm2, Mode::exact, {{"N", as_param(N)}, {"n", as_param(n)}},
                                      [=] { return verify_thm2(n, N); }));
            }
            if (wanted(IdentityId::thm4)) {
                jobs.push_back(single(IdentityId::thm4, Mode::exact, {{"N", as_param(N)}, {"k", as_param(n)}},
                                      [=] { return verify_thm4(n, N); }));
            }
        }
        if (wanted(IdentityId::eq57)) {
            jobs.push_back(single(IdentityId::eq57, Mode::exact, {{"N", as_param(N)}},
                                  [=] { return verify_inverse_delta(N); }));
        }
    }
    if (wanted(IdentityId::eq58)) {
        jobs.push_back(single(IdentityId::eq58, Mode::exact, {{"K", as_param(K)}}, [=] { return verify_sqrt_expansion(K); }));
    }
    if (wanted(IdentityId::eq59)) {
        const auto terms = config.terms_eq59;
        jobs.push_back(single(IdentityId::eq59, Mode::numeric, {{"terms", as_param(terms)}},
                              [=] { return verify_eq59(terms); }));
    }
    if (wanted(IdentityId::eq62)) {
        const auto terms = config.terms_eq62;
        jobs.push_back(single(IdentityId::eq62, Mode::numeric, {{"terms", as_param(terms)}},
                              [=] { return verify_eq62(terms); }));
    }
    const bool eq64 = wanted(IdentityId::eq64);
    const bool eq66 = wanted(IdentityId::eq66);
    if (eq64 || eq66) {
        const auto nmax = config.max_conv_n;
        jobs.push_back(Job{eq64 ? IdentityId::eq64 : IdentityId::eq66, Mode::exact, {{"nmax", as_param(nmax)}}, [=] {
                               const auto both = verify_convolution_recurrences(nmax);
                               std::vector<VerificationReport> out;
                               if (eq64) {
                                   out.push_back(both[0]);
                               }
                               if (eq66) {
                                   out.push_back(both[1]);
                               }
                               return out;
                           }});
    }
    if (wanted(IdentityId::asymptotic)) {
        const auto n = config.asymptotic_n;
        jobs.push_back(single(IdentityId::asymptotic, Mode::numeric, {{"n", as_param(n)}},
                              [=] { return verify_asymptotic(n); }));
    }
    return jobs;
}

std::vector<VerificationReport> run_jobs(std::vector<Job> jobs, unsigned threads)
{
    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));

    std::vector<std::vector<VerificationReport>> results(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next.fetch_add(1); k < jobs.size(); k = next.fetch_add(1)) {
            const Job& job = jobs[k];
            try {
                results[k] = job.run();
            } catch (const std::exception& e) {
                VerificationReport r;
                r.id = job.id;
                r.mode = job.mode;
                r.parameters = job.parameters;
                r.passed = false;
                r.witness = Witness{-1, "", "", e.what()};
                results[k] = {std::move(r)};
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        worker();
    }

    std::vector<VerificationReport> reports;
    for (auto& batch : results) {
        for (auto& r : batch) {
            reports.push_back(std::move(r));
        }
    }
    sort_reports(reports);
    return reports;
}

std::vector<VerificationReport> run_verification(std::span<const IdentityId> ids, const RunConfig& config)
{
    return run_jobs(plan_jobs(ids, config), config.parallelism);
}

}  // namespace catode
