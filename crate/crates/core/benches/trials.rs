use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use reeslike::exec::ExecMode;
use reeslike::suites::{run_suite, Suite};
use reeslike::text::parse_ctx;

const CASES: [(Suite, &str, u64); 4] = [
    (Suite::Square, "rees{ring=Z,a=ideal[6]}", 400),
    (Suite::PatchMatrix, "rees{ring=Zn:4,a=ideal[2]}", 100),
    (Suite::Reduce, "rees{ring=Zn:12,a=ideal[6]}", 100),
    (Suite::K1, "rees{ring=Fp:2,a=ideal[1]}", 40),
];

fn suites(c: &mut Criterion) {
    for (suite, ctx, trials) in CASES {
        let ctx = parse_ctx(ctx).unwrap();
        let mut group = c.benchmark_group(format!("{suite}/{trials}"));
        group.sample_size(10);
        for mode in [ExecMode::Sequential, ExecMode::Parallel] {
            group.bench_with_input(BenchmarkId::from_parameter(mode), &mode, |b, &mode| {
                b.iter(|| run_suite(suite, &ctx, 1, trials, mode).unwrap())
            });
        }
        group.finish();
    }
}

criterion_group!(benches, suites);
criterion_main!(benches);
