// Copyright 2026 The Contextua Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include "benchmark/benchmark.h"
#include "contextua/fixtures.h"
#include "contextua/gf2.h"
#include "contextua/mbqc.h"
#include "contextua/pauli.h"
#include "contextua/presheaf.h"
#include "contextua/stabilizer.h"

using namespace contextua;

namespace {

PauliOperator random_pauli(std::mt19937_64 &rng, size_t n) {
    std::string s;
    for (size_t k = 0; k < n; k++) {
        s.push_back("IXYZ"[rng() % 4]);
    }
    return parse_pauli(s);
}

void BM_multiply(benchmark::State &state) {
    std::mt19937_64 rng(1);
    const auto n = static_cast<size_t>(state.range(0));
    auto a = random_pauli(rng, n);
    auto b = random_pauli(rng, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_multiply)->Arg(8)->Arg(64)->Arg(1024);

void BM_gf2_solve(benchmark::State &state) {
    std::mt19937_64 rng(2);
    const auto n = static_cast<size_t>(state.range(0));
    gf2::Gf2System sys{gf2::BitMatrix(n, n), BitVec(n), {}};
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            sys.a.set(r, c, rng() & 1);
        }
        sys.b.set(r, rng() & 1);
    }
    for (size_t c = 0; c < n; c++) {
        sys.labels.push_back("x" + std::to_string(c));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(gf2::solve(sys));
    }
}
BENCHMARK(BM_gf2_solve)->Arg(16)->Arg(128)->Arg(512);

void BM_maximal_contexts_mermin(benchmark::State &state) {
    const auto obs = fixtures::mermin_observables();
    for (auto _ : state) {
        benchmark::DoNotOptimize(maximal_contexts(obs));
    }
}
BENCHMARK(BM_maximal_contexts_mermin);

void BM_solve_global_mermin(benchmark::State &state) {
    const auto problem = build_global_problem(fixtures::mermin_contexts(), {});
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_global(problem));
    }
}
BENCHMARK(BM_solve_global_mermin);

void BM_brute_force_mermin(benchmark::State &state) {
    const auto contexts = fixtures::mermin_contexts();
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_global(contexts, {}));
    }
}
BENCHMARK(BM_brute_force_mermin);

void BM_member_sign_ghz(benchmark::State &state) {
    const auto n = static_cast<size_t>(state.range(0));
    const auto group = make_stabilizer(fixtures::ghz_generators(n));
    const auto probe = parse_pauli(std::string(n, 'X'));
    for (auto _ : state) {
        benchmark::DoNotOptimize(group.member_sign(probe));
    }
}
BENCHMARK(BM_member_sign_ghz)->Arg(3)->Arg(32)->Arg(256);

void BM_contextuality_report_anders_browne(benchmark::State &state) {
    const auto inst = mbqc::validate_instance(fixtures::anders_browne());
    for (auto _ : state) {
        benchmark::DoNotOptimize(mbqc::contextuality_report(inst));
    }
}
BENCHMARK(BM_contextuality_report_anders_browne);

}  // namespace

BENCHMARK_MAIN();
