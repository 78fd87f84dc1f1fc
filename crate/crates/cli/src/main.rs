fn main() {
    println!("stab-lab placeholder");
}
