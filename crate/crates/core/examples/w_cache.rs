//! Writing, reading and validating the JSON cache of W-generators.

use rectw::cli::{gen_cache, load_or_build_w, WCache};
use rectw::w_construct::Ambient;
use rectw::Instance;

fn main() {
    let inst = Instance::new(2, 1, 2).unwrap();
    let path = std::env::temp_dir().join("rectw-example-w212.json");
    let cache = gen_cache(inst, &path).expect("cache written");
    println!("wrote {} entries to {}", cache.generators.len(), path.display());
    let back = WCache::read(&path).unwrap();
    println!("header: m={} n={} l={} engine-version={}", back.m, back.n, back.l, back.engine_version);
    let amb = Ambient::new(inst);
    let (w, warning) = load_or_build_w(&amb, Some(&path)).unwrap();
    println!("reloaded W1_12 = {} (warning: {warning:?})", amb.vx.display(w.w1(1, 2)));
    std::fs::remove_file(path).ok();
}
