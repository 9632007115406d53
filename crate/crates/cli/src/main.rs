fn main() {
    println!("bk");
}
