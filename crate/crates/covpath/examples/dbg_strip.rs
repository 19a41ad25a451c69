use covpath::instances::random_general_position;
use covpath::noncrossing::{strip_cover, VerticalStrip};

fn main() {
    let n = 8 + (13usize % 30);
    let pts = random_general_position(n, 5013, 1 << 16).unwrap();
    let strip = VerticalStrip::around(&pts);
    match strip_cover(&pts, &strip) {
        Ok((p, c)) => println!("ok: edges={} expected={}", p.edge_count(), c.expected_edge_count()),
        Err(e) => println!("err: {e}"),
    }
}
