use bk_core::rootsys::build_root_system;
use bk_core::parabolic::ParabolicContext;

fn main() {
    eprintln!("building A3...");
    let rs = build_root_system("A3").unwrap();
    eprintln!("A3 ok: {} roots, w0 len {}", rs.num_roots(), rs.w0_word.len());
    eprintln!("ctx A3 [0]...");
    let c = ParabolicContext::new(rs, &[0]).unwrap();
    eprintln!("ctx ok: n_dim {} z_rank {}", c.n_dim, c.z_rank);
}
