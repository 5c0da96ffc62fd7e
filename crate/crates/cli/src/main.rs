fn main() {
    svconst::run();
}
