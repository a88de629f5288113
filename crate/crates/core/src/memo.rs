use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::RwLock;

/// Thread-safe memo table. Purely a cache: cloning starts empty and results
/// never depend on what has been stored.
pub(crate) struct Memo<K, V> {
    table: RwLock<HashMap<K, V>>,
}

impl<K: Eq + Hash, V: Clone> Memo<K, V> {
    pub fn new() -> Self {
        Memo {
            table: RwLock::new(HashMap::new()),
        }
    }

    pub fn get(&self, key: &K) -> Option<V> {
        self.table.read().expect("memo lock").get(key).cloned()
    }

    pub fn put(&self, key: K, value: V) {
        self.table.write().expect("memo lock").insert(key, value);
    }
}

impl<K: Eq + Hash, V: Clone> Default for Memo<K, V> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Eq + Hash, V: Clone> Clone for Memo<K, V> {
    fn clone(&self) -> Self {
        Self::new()
    }
}

impl<K, V> fmt::Debug for Memo<K, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Memo")
    }
}
