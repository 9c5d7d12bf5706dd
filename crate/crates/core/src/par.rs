//! Data-parallel helpers with a sequential fallback when the `parallel`
//! feature is disabled. Output order always matches input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub fn map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    items.into_iter().map(f).collect()
}

/// First `Some` in input order.
#[cfg(feature = "parallel")]
pub fn find_first<T, U, F>(items: Vec<T>, f: F) -> Option<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> Option<U> + Sync + Send,
{
    items.into_par_iter().map(f).find_first(Option::is_some).flatten()
}

#[cfg(not(feature = "parallel"))]
pub fn find_first<T, U, F>(items: Vec<T>, f: F) -> Option<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> Option<U> + Sync + Send,
{
    items.into_iter().find_map(f)
}

/// Sequential map, for benchmarking against [`map`].
pub fn map_sequential<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    #[test]
    fn map_preserves_order() {
        let v: Vec<u64> = (0..500).collect();
        assert_eq!(super::map(v.clone(), |x| x * x), super::map_sequential(v, |x| x * x));
    }

    #[test]
    fn find_first_is_leftmost() {
        let v: Vec<u32> = (0..100).collect();
        assert_eq!(super::find_first(v, |x| (x % 7 == 6).then_some(x)), Some(6));
    }
}
