/// Record of one solver run, shared by the harmony-search engine and the
/// genetic-algorithm baseline so results compare side by side.
#[derive(Debug, Clone, PartialEq)]
pub struct RunTrace<V, T> {
    /// Best-so-far fitness after each improvisation (or generation).
    /// Monotone nonincreasing.
    pub history: Vec<T>,
    /// Best fitness in the initial memory/population.
    pub f_initial: T,
    /// Best fitness when the run stopped.
    pub f_final: T,
    /// Total fitness evaluations, initialization included.
    pub evaluations: usize,
    /// Best vector found.
    pub best: Vec<V>,
}

impl<V, T> RunTrace<V, T> {
    /// Number of improvisations (or generations) performed.
    pub fn iterations(&self) -> usize {
        self.history.len()
    }
}
